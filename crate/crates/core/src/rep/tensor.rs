use std::collections::BTreeMap;

use rustc_hash::FxHashMap;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::character::{weight_multiplicities, weyl_dimension, Entry, Multiplicity, WeightMultiset};
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::weight::Weight;

/// An isotypic decomposition: dominant highest weight → multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    entries: BTreeMap<Weight, Multiplicity>,
}

impl Decomposition {
    pub fn irreducible(highest: Weight) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(highest, 1);
        Decomposition { entries }
    }

    pub fn multiplicity(&self, highest: &Weight) -> Multiplicity {
        self.entries.get(highest).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, Multiplicity)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ mult · dim` over all summands.
    pub fn dimension(&self, rs: &RootSystem) -> Result<num_bigint::BigUint> {
        let mut total = num_bigint::BigUint::default();
        for (w, m) in &self.entries {
            total += weyl_dimension(rs, w)? * *m;
        }
        Ok(total)
    }

    fn from_signed(acc: FxHashMap<Weight, i128>) -> Self {
        let entries = acc
            .into_iter()
            .filter(|(_, m)| *m != 0)
            .map(|(w, m)| {
                assert!(m > 0, "negative multiplicity {m} at {w}");
                (w, m as Multiplicity)
            })
            .collect();
        Decomposition { entries }
    }
}

impl FromIterator<(Weight, Multiplicity)> for Decomposition {
    fn from_iter<I: IntoIterator<Item = (Weight, Multiplicity)>>(iter: I) -> Self {
        let mut entries = BTreeMap::new();
        for (w, m) in iter {
            if m > 0 {
                *entries.entry(w).or_insert(0) += m;
            }
        }
        Decomposition { entries }
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (w, m) in &self.entries {
            seq.serialize_element(&Entry {
                weight: w,
                multiplicity: *m,
            })?;
        }
        seq.end()
    }
}

/// Klimyk's rule: adds `coef · [V(highest) ⊗ V(small)]` into `acc`.
///
/// Each weight `ν` of the small factor moves `highest + δ + ν` into the
/// dominant chamber; singular results cancel, regular ones contribute
/// `sign(w) · m(ν)` at `w(highest + δ + ν) − δ`.
fn klimyk_accumulate(
    rs: &RootSystem,
    highest: &Weight,
    small: &WeightMultiset,
    coef: i128,
    acc: &mut FxHashMap<Weight, i128>,
) -> Result<()> {
    let shift = highest + &rs.delta();
    let mut x = shift.clone();
    let mut overflow = false;
    for (nu, m) in small.dominant_entries() {
        let contribution = coef
            .checked_mul(*m as i128)
            .ok_or(Error::Overflow("tensor product"))?;
        rs.for_each_in_orbit(nu, |orbit_weight, _| {
            x.labels_mut().copy_from_slice(shift.labels());
            x.add_scaled_in_place(orbit_weight.labels(), 1);
            let mut steps = 0usize;
            loop {
                let mut negative = None;
                for (i, &a) in x.labels().iter().enumerate() {
                    if a == 0 {
                        return;
                    }
                    if a < 0 && negative.is_none() {
                        negative = Some(i);
                    }
                }
                match negative {
                    Some(i) => {
                        rs.reflect_in_place(&mut x, i);
                        steps += 1;
                    }
                    None => break,
                }
            }
            let signed = if steps.is_multiple_of(2) { contribution } else { -contribution };
            let mut key = x.clone();
            for a in key.labels_mut() {
                *a -= 1;
            }
            let slot = acc.entry(key).or_insert(0);
            match slot.checked_add(signed) {
                Some(v) => *slot = v,
                None => overflow = true,
            }
        });
        if overflow {
            return Err(Error::Overflow("tensor product"));
        }
    }
    Ok(())
}

/// Complete decomposition of `V(λ) ⊗ V(μ)` by Klimyk's rule, iterating over
/// the weights of the smaller factor.
pub fn tensor_decompose(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<Decomposition> {
    rs.check_dominant(lambda)?;
    rs.check_dominant(mu)?;
    let (big, small) = if weyl_dimension(rs, lambda)? >= weyl_dimension(rs, mu)? {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let ch = weight_multiplicities(rs, small)?;
    let mut acc = FxHashMap::default();
    klimyk_accumulate(rs, big, &ch, 1, &mut acc)?;
    Ok(Decomposition::from_signed(acc))
}

/// `decomposition ⊗ V(λ)`, tensoring every isotypic piece with `V(λ)`.
pub fn tensor_with(rs: &RootSystem, decomposition: &Decomposition, lambda: &Weight) -> Result<Decomposition> {
    rs.check_dominant(lambda)?;
    let ch = weight_multiplicities(rs, lambda)?;
    tensor_with_character(rs, decomposition, &ch)
}

pub(crate) fn tensor_with_character(
    rs: &RootSystem,
    decomposition: &Decomposition,
    ch: &WeightMultiset,
) -> Result<Decomposition> {
    let mut acc = FxHashMap::default();
    for (nu, m) in decomposition.iter() {
        let coef = i128::try_from(m).map_err(|_| Error::Overflow("tensor product"))?;
        klimyk_accumulate(rs, nu, ch, coef, &mut acc)?;
    }
    Ok(Decomposition::from_signed(acc))
}

/// Independent route for [`tensor_decompose`]: multiply the two full
/// characters, then repeatedly strip the character of the highest remaining
/// dominant weight.
pub fn tensor_decompose_oracle(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<Decomposition> {
    rs.check_dominant(lambda)?;
    rs.check_dominant(mu)?;
    let left = weight_multiplicities(rs, lambda)?.expand(rs);
    let right = weight_multiplicities(rs, mu)?.expand(rs);

    // dominant part of the product character
    let mut product: FxHashMap<Weight, i128> = FxHashMap::default();
    for (p, mp) in &left {
        for (t, mt) in &right {
            let s = p + t;
            if s.is_dominant() {
                *product.entry(s).or_insert(0) += (*mp * *mt) as i128;
            }
        }
    }

    let delta = rs.delta();
    let mut out = BTreeMap::new();
    loop {
        product.retain(|_, m| *m != 0);
        // maximal in dominance order: maximize the pairing with δ
        let Some(top) = product
            .keys()
            .max_by_key(|w| (rs.scaled_inner(w.labels(), delta.labels()), (*w).clone()))
            .cloned()
        else {
            break;
        };
        let c = product[&top];
        assert!(c > 0, "character stripping left a negative coefficient at {top}");
        let ch = weight_multiplicities(rs, &top)?;
        for (w, m) in ch.dominant_entries() {
            *product.entry(w.clone()).or_insert(0) -= c * *m as i128;
        }
        out.insert(top, c as Multiplicity);
    }
    Ok(Decomposition { entries: out })
}

/// Decomposition of `V(λ)^{⊗n}`, folding one factor at a time.
pub fn tensor_power(rs: &RootSystem, lambda: &Weight, n: usize) -> Result<Decomposition> {
    rs.check_dominant(lambda)?;
    if n == 0 {
        return Ok(Decomposition::irreducible(rs.zero()));
    }
    let ch = weight_multiplicities(rs, lambda)?;
    let mut d = Decomposition::irreducible(lambda.clone());
    for _ in 1..n {
        d = tensor_with_character(rs, &d, &ch)?;
    }
    Ok(d)
}

/// Multiplicity of the trivial module in `V(f_1) ⊗ ... ⊗ V(f_k)`.
///
/// Folds the first `k − 1` factors; the last step only needs the
/// multiplicity of the dual of the last factor, by Schur's lemma.
pub fn invariant_dimension(rs: &RootSystem, factors: &[Weight]) -> Result<Multiplicity> {
    let (last, rest) = factors
        .split_last()
        .ok_or_else(|| Error::InvalidArgument("invariant_dimension needs at least one factor".into()))?;
    for f in factors {
        rs.check_dominant(f)?;
    }
    let mut d = Decomposition::irreducible(rs.zero());
    for f in rest {
        d = tensor_with(rs, &d, f)?;
    }
    Ok(d.multiplicity(&rs.dual_involution(last)?))
}

/// Smallest `n ≤ n_max` with `(V(λ)^{⊗n})^g ≠ 0`, and the dimension of that
/// invariant space.
pub fn min_invariant_power(rs: &RootSystem, lambda: &Weight, n_max: usize) -> Result<Option<(usize, Multiplicity)>> {
    rs.check_dominant(lambda)?;
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be positive".into()));
    }
    if lambda.is_zero() {
        return Ok(Some((1, 1)));
    }
    let dual = rs.dual_involution(lambda)?;
    let ch = weight_multiplicities(rs, lambda)?;
    // d = V^{⊗(n-1)}; invariants of V^{⊗n} = multiplicity of V* in d
    let mut d = Decomposition::irreducible(lambda.clone());
    for n in 2..=n_max {
        let inv = d.multiplicity(&dual);
        if inv > 0 {
            return Ok(Some((n, inv)));
        }
        if n < n_max {
            d = tensor_with_character(rs, &d, &ch)?;
        }
    }
    Ok(None)
}

/// Multiplicity of `V(μ)` in `V(λ)^{⊗n}`.
pub fn contains_module(rs: &RootSystem, lambda: &Weight, n: usize, mu: &Weight) -> Result<Multiplicity> {
    rs.check_dominant(mu)?;
    if n == 0 {
        return Err(Error::InvalidArgument("tensor power must be positive".into()));
    }
    Ok(tensor_power(rs, lambda, n)?.multiplicity(mu))
}
