//! Abstract syntax for algebra expressions and their evaluation into normal
//! form. Scalars stay polymorphic in arity until combined with a tensor
//! value (so `2*(Fp # P)` and `8*[Fp,Fm]*P + P` both work).

use crate::error::{Error, Result};
use crate::pbw::{casimir, Generator, PbwElement};
use crate::scalar::Scalar;
use crate::tensor::{outer, TensorElement};

#[derive(Clone, Debug, PartialEq)]
pub enum Expression {
    Scalar(Scalar),
    Gen(Generator),
    /// The Casimir element, spelled `C` in the surface syntax.
    Casimir,
    Add(Box<Expression>, Box<Expression>),
    Sub(Box<Expression>, Box<Expression>),
    Mul(Box<Expression>, Box<Expression>),
    Neg(Box<Expression>),
    Pow(Box<Expression>, u32),
    Commutator(Box<Expression>, Box<Expression>),
    Anticommutator(Box<Expression>, Box<Expression>),
    /// Tensor of arity-consistent parts; the arity marker of the syntax.
    Tensor(Vec<Expression>),
}

/// Evaluation result: scalars are arity-agnostic until forced.
#[derive(Clone, Debug)]
pub enum Value {
    Scalar(Scalar),
    Tensor(TensorElement),
}

impl Value {
    fn into_tensor(self, arity: usize) -> TensorElement {
        match self {
            Value::Tensor(t) => t,
            Value::Scalar(c) => TensorElement::unit(arity).scale(&c),
        }
    }

    pub fn arity(&self) -> Option<usize> {
        match self {
            Value::Scalar(_) => None,
            Value::Tensor(t) => Some(t.arity()),
        }
    }
}

fn combine(
    lhs: Value,
    rhs: Value,
    scalar_op: impl Fn(Scalar, Scalar) -> Scalar,
    tensor_op: impl Fn(&TensorElement, &TensorElement) -> Result<TensorElement>,
) -> Result<Value> {
    match (lhs, rhs) {
        (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(scalar_op(a, b))),
        (a, b) => {
            let arity = a.arity().or(b.arity()).expect("one side is a tensor");
            let ta = a.into_tensor(arity);
            let tb = b.into_tensor(arity);
            Ok(Value::Tensor(tensor_op(&ta, &tb)?))
        }
    }
}

/// Evaluate an expression tree to a normalized value.
pub fn eval(expr: &Expression) -> Result<Value> {
    match expr {
        Expression::Scalar(c) => Ok(Value::Scalar(c.clone())),
        Expression::Gen(g) => Ok(Value::Tensor(TensorElement::from(&PbwElement::generator(
            *g,
        )))),
        Expression::Casimir => Ok(Value::Tensor(TensorElement::from(&casimir()))),
        Expression::Add(a, b) => combine(eval(a)?, eval(b)?, |x, y| x + y, |x, y| x.checked_add(y)),
        Expression::Sub(a, b) => combine(eval(a)?, eval(b)?, |x, y| x - y, |x, y| x.checked_sub(y)),
        Expression::Mul(a, b) => {
            // scalar * tensor scales rather than forcing an arity
            match (eval(a)?, eval(b)?) {
                (Value::Scalar(c), Value::Tensor(t)) | (Value::Tensor(t), Value::Scalar(c)) => {
                    Ok(Value::Tensor(t.scale(&c)))
                }
                (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x * y)),
                (Value::Tensor(x), Value::Tensor(y)) => Ok(Value::Tensor(x.checked_mul(&y)?)),
            }
        }
        Expression::Neg(a) => match eval(a)? {
            Value::Scalar(c) => Ok(Value::Scalar(-c)),
            Value::Tensor(t) => Ok(Value::Tensor(-&t)),
        },
        Expression::Pow(a, e) => match eval(a)? {
            Value::Scalar(c) => Ok(Value::Scalar(num::traits::Pow::pow(c, *e))),
            Value::Tensor(t) => {
                let mut acc = TensorElement::unit(t.arity());
                for _ in 0..*e {
                    acc = acc.checked_mul(&t)?;
                }
                Ok(Value::Tensor(acc))
            }
        },
        Expression::Commutator(a, b) => bracket_value(eval(a)?, eval(b)?, false),
        Expression::Anticommutator(a, b) => bracket_value(eval(a)?, eval(b)?, true),
        Expression::Tensor(parts) => {
            let mut acc: Option<TensorElement> = None;
            for part in parts {
                let v = eval(part)?.into_tensor(1);
                acc = Some(match acc {
                    None => v,
                    Some(prev) => outer(&prev, &v),
                });
            }
            Ok(Value::Tensor(acc.expect("tensor node has parts")))
        }
    }
}

fn bracket_value(a: Value, b: Value, anti: bool) -> Result<Value> {
    match (a, b) {
        // scalars are central: [c, x] = 0, {c, x} = 2cx
        (Value::Scalar(c), v) | (v, Value::Scalar(c)) => {
            if anti {
                match v {
                    Value::Scalar(d) => Ok(Value::Scalar(c * d * crate::scalar::int(2))),
                    Value::Tensor(t) => Ok(Value::Tensor(t.scale(&(c * crate::scalar::int(2))))),
                }
            } else {
                match v {
                    Value::Scalar(_) => Ok(Value::Scalar(Scalar::from_integer(0.into()))),
                    Value::Tensor(t) => Ok(Value::Tensor(TensorElement::zero(t.arity()))),
                }
            }
        }
        (Value::Tensor(x), Value::Tensor(y)) => {
            Ok(Value::Tensor(TensorElement::bracket(&x, &y, anti)?))
        }
    }
}

/// Evaluate and require arity 1, returning the PBW normal form. The result is
/// canonical: independent of association and idempotent under re-evaluation.
pub fn normal_form(expr: &Expression) -> Result<PbwElement> {
    match eval(expr)? {
        Value::Scalar(c) => Ok(PbwElement::from_term(crate::pbw::PbwMonomial::one(), c)),
        Value::Tensor(t) => {
            if t.arity() != 1 {
                return Err(Error::ArityMismatch {
                    expected: 1,
                    got: t.arity(),
                });
            }
            t.try_into_pbw()
        }
    }
}

/// Evaluate to a tensor element of any arity (scalars become arity 1).
pub fn eval_tensor(expr: &Expression) -> Result<TensorElement> {
    Ok(eval(expr)?.into_tensor(1))
}
