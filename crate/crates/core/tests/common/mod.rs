#![allow(dead_code)]

use conjlab_core::group::{Generator, Group, GroupElement, GroupModel, Word};
use proptest::prelude::*;

pub fn models() -> Vec<GroupModel> {
    ["h3", "free2", "dinf", "dsemi", "h3semi", "(h3|dinf)"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

pub fn model(i: usize) -> GroupModel {
    models().swap_remove(i)
}

pub fn model_index() -> impl Strategy<Value = usize> {
    0..models().len()
}

/// Letter indices; reduced modulo the model's letter count when used.
pub fn word_indices(max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..64, 0..=max_len)
}

pub fn word(m: &GroupModel, idx: &[usize]) -> Word {
    let letters: Vec<Generator> = m.letters();
    idx.iter()
        .map(|i| letters[i % letters.len()].clone())
        .collect()
}

pub fn element(m: &GroupModel, idx: &[usize]) -> GroupElement {
    m.normal_form(&word(m, idx)).unwrap()
}
