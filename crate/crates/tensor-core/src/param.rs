//! Named trainable parameters. Parameters live outside any tape; a tape
//! borrows them as leaves per step and `backward` accumulates into their
//! gradient buffers.

use std::cell::{Ref, RefCell, RefMut};
use std::rc::Rc;

use crate::elem::Element;
use crate::shape::Shape;

#[derive(Debug)]
pub struct Param<E: Element> {
    name: String,
    shape: Shape,
    value: RefCell<Vec<E>>,
    grad: RefCell<Vec<E>>,
}

impl<E: Element> Param<E> {
    pub fn new(name: impl Into<String>, shape: impl Into<Shape>, value: Vec<E>) -> Rc<Self> {
        let shape = shape.into();
        assert_eq!(value.len(), shape.numel(), "param data must fill its shape");
        let grad = vec![E::zero(); value.len()];
        Rc::new(Param {
            name: name.into(),
            shape,
            value: RefCell::new(value),
            grad: RefCell::new(grad),
        })
    }

    pub fn zeros(name: impl Into<String>, shape: impl Into<Shape>) -> Rc<Self> {
        let shape = shape.into();
        let n = shape.numel();
        Param::new(name, shape, vec![E::zero(); n])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn numel(&self) -> usize {
        self.shape.numel()
    }

    pub fn value(&self) -> Ref<'_, Vec<E>> {
        self.value.borrow()
    }

    pub fn value_mut(&self) -> RefMut<'_, Vec<E>> {
        self.value.borrow_mut()
    }

    pub fn grad(&self) -> Ref<'_, Vec<E>> {
        self.grad.borrow()
    }

    pub fn grad_mut(&self) -> RefMut<'_, Vec<E>> {
        self.grad.borrow_mut()
    }

    pub fn zero_grad(&self) {
        self.grad.borrow_mut().fill(E::zero());
    }

    pub(crate) fn accumulate_grad(&self, delta: &[E]) {
        let mut g = self.grad.borrow_mut();
        debug_assert_eq!(g.len(), delta.len());
        for (gi, &di) in g.iter_mut().zip(delta) {
            *gi = *gi + di;
        }
    }
}

/// Convenience for optimizer and checkpoint code.
pub type ParamList<E> = Vec<Rc<Param<E>>>;
