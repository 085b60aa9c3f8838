//! Dense compute kernels shared by the taped forward pass, the backward
//! pass, and tape-free inference. Keeping one implementation per primitive
//! makes taped and incremental forward paths bit-identical.

use crate::elem::Element;

/// out[j] += sum_i x[i] * w[i, j]  for w stored row-major [k, n].
pub fn vecmat_acc<E: Element>(x: &[E], w: &[E], out: &mut [E]) {
    let n = out.len();
    debug_assert_eq!(x.len() * n, w.len());
    for (i, &xi) in x.iter().enumerate() {
        if xi == E::zero() {
            continue;
        }
        let row = &w[i * n..(i + 1) * n];
        for (o, &wij) in out.iter_mut().zip(row) {
            *o = *o + xi * wij;
        }
    }
}

/// c[m, n] += a[m, k] * b[k, n]
pub fn matmul_acc<E: Element>(a: &[E], b: &[E], m: usize, k: usize, n: usize, c: &mut [E]) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(c.len(), m * n);
    for i in 0..m {
        vecmat_acc(&a[i * k..(i + 1) * k], b, &mut c[i * n..(i + 1) * n]);
    }
}

/// c[m, n] += a[m, k] * b[n, k]^T
pub fn matmul_nt_acc<E: Element>(a: &[E], b: &[E], m: usize, k: usize, n: usize, c: &mut [E]) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), n * k);
    for i in 0..m {
        let ar = &a[i * k..(i + 1) * k];
        for j in 0..n {
            let br = &b[j * k..(j + 1) * k];
            let dot: E = ar.iter().zip(br).map(|(&x, &y)| x * y).sum();
            c[i * n + j] = c[i * n + j] + dot;
        }
    }
}

/// c[k, n] += a[m, k]^T * b[m, n]
pub fn matmul_tn_acc<E: Element>(a: &[E], b: &[E], m: usize, k: usize, n: usize, c: &mut [E]) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), m * n);
    for i in 0..m {
        let ar = &a[i * k..(i + 1) * k];
        let br = &b[i * n..(i + 1) * n];
        for (p, &ap) in ar.iter().enumerate() {
            if ap == E::zero() {
                continue;
            }
            let cr = &mut c[p * n..(p + 1) * n];
            for (cv, &bv) in cr.iter_mut().zip(br) {
                *cv = *cv + ap * bv;
            }
        }
    }
}

/// One output row of a 1-d convolution over a single sequence.
///
/// `x` is [time, in_ch] row-major, `w` is [width, in_ch, out_ch], and the
/// window for output position `t` starts at `t - pad_left`. Positions
/// outside the sequence contribute nothing.
pub fn conv_row<E: Element>(
    x: &[E],
    time: usize,
    in_ch: usize,
    w: &[E],
    width: usize,
    out_ch: usize,
    pad_left: usize,
    t: usize,
    out_row: &mut [E],
) {
    debug_assert_eq!(out_row.len(), out_ch);
    for dk in 0..width {
        let src = t as isize + dk as isize - pad_left as isize;
        if src < 0 || src >= time as isize {
            continue;
        }
        let src = src as usize;
        let x_row = &x[src * in_ch..(src + 1) * in_ch];
        let w_slice = &w[dk * in_ch * out_ch..(dk + 1) * in_ch * out_ch];
        vecmat_acc(x_row, w_slice, out_row);
    }
}

/// GLU over the last axis: the first half gates through the sigmoid of the
/// second half.
pub fn glu_row<E: Element>(row: &[E], out_row: &mut [E]) {
    let half = out_row.len();
    debug_assert_eq!(row.len(), 2 * half);
    for j in 0..half {
        out_row[j] = row[j] * sigmoid(row[half + j]);
    }
}

pub fn sigmoid<E: Element>(x: E) -> E {
    E::one() / (E::one() + (-x).exp())
}

/// Numerically stable softmax of one lane, written into `out`.
pub fn softmax_lane<E: Element>(lane: &[E], out: &mut [E]) {
    let mut max = lane[0];
    for &v in &lane[1..] {
        if v > max {
            max = v;
        }
    }
    let mut sum = E::zero();
    for (o, &v) in out.iter_mut().zip(lane) {
        let e = (v - max).exp();
        *o = e;
        sum = sum + e;
    }
    let inv = E::one() / sum;
    for o in out.iter_mut() {
        *o = *o * inv;
    }
}

/// Softmax over the unmasked entries of a lane; masked entries get exactly
/// zero weight.
pub fn masked_softmax_lane<E: Element>(lane: &[E], mask: &[bool], out: &mut [E]) {
    debug_assert_eq!(lane.len(), mask.len());
    let mut max: Option<E> = None;
    for (&v, &m) in lane.iter().zip(mask) {
        if !m && max.is_none_or(|cur| v > cur) {
            max = Some(v);
        }
    }
    let Some(max) = max else {
        out.fill(E::zero());
        return;
    };
    let mut sum = E::zero();
    for ((o, &v), &m) in out.iter_mut().zip(lane).zip(mask) {
        if m {
            *o = E::zero();
        } else {
            let e = (v - max).exp();
            *o = e;
            sum = sum + e;
        }
    }
    let inv = E::one() / sum;
    for o in out.iter_mut() {
        *o = *o * inv;
    }
}

/// log(sum(exp(lane))) with the usual max shift.
pub fn logsumexp<E: Element>(lane: &[E]) -> E {
    let mut max = lane[0];
    for &v in &lane[1..] {
        if v > max {
            max = v;
        }
    }
    let sum: E = lane.iter().map(|&v| (v - max).exp()).sum();
    max + sum.ln()
}
