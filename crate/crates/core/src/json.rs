//! JSON encodings shared by the command-line tool and sweep witnesses.

use serde_json::{json, Value};

use crate::affine::{AffinePermutation, IndexSet};
use crate::kcode::KCode;
use crate::order_lab::{Fiber, FiberRow};
use crate::shapes::{CorePartition, KBoundedPartition, WeakStrip};
use crate::symfunc::{GtildeCombination, SymElt};

pub fn perm(w: &AffinePermutation) -> Value {
    json!({"k": w.k(), "window": w.window()})
}

pub fn index_set(a: &IndexSet) -> Value {
    json!({"k": a.k(), "set": a.to_vec()})
}

pub fn bounded(lambda: &KBoundedPartition) -> Value {
    json!({"k": lambda.k(), "kind": "bounded", "parts": lambda.parts()})
}

pub fn core(c: &CorePartition) -> Value {
    json!({"k": c.k(), "kind": "core", "parts": c.parts()})
}

pub fn strip(s: &WeakStrip) -> Value {
    json!({"base": bounded(&s.base), "A": index_set(&s.indices), "top": bounded(&s.top)})
}

pub fn kcode(c: &KCode) -> Value {
    json!({"k": c.k(), "values": c.values()})
}

/// Terms are listed by degree, then in the intra-degree order.
pub fn sym_elt(x: &SymElt) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|(lambda, c)| json!({"parts": lambda.parts(), "coeff": c.to_string()}))
        .collect();
    json!({"k": x.k(), "basis": x.basis().tag(), "terms": terms})
}

pub fn gtilde_combination(x: &GtildeCombination) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|(lambda, c)| json!({"parts": lambda.parts(), "coeff": c.to_string()}))
        .collect();
    json!({"k": x.k(), "basis": "gtilde", "terms": terms})
}

pub fn fiber(f: &Fiber) -> Value {
    let members: Vec<Value> = f.members.iter().map(index_set).collect();
    json!({"A": index_set(&f.a), "u": perm(&f.u), "members": members})
}

pub fn fiber_row(row: &FiberRow) -> Value {
    json!({"v": perm(&row.v), "A": index_set(&row.a), "sign": row.sign})
}
