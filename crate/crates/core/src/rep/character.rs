use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rustc_hash::{FxHashMap, FxHashSet};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::weight::Weight;

/// Weight and tensor multiplicities.
pub type Multiplicity = u128;

/// Dimension of the irreducible module of highest weight `λ`, by the Weyl
/// product over positive roots, `∏ (λ+δ, α) / ∏ (δ, α)`.
pub fn weyl_dimension(rs: &RootSystem, highest: &Weight) -> Result<BigUint> {
    rs.check_dominant(highest)?;
    let shifted = highest + &rs.delta();
    let delta = rs.delta();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in rs.positive_roots() {
        num *= rs.scaled_inner(shifted.labels(), root.labels.labels());
        den *= rs.scaled_inner(delta.labels(), root.labels.labels());
    }
    let (q, r) = (&num / &den, &num % &den);
    assert!(r.is_zero(), "Weyl dimension quotient is not integral");
    Ok(q.to_biguint().expect("dimensions are positive"))
}

/// [`weyl_dimension`] as a machine integer, for callers that know the
/// module is small.
pub fn weyl_dimension_u128(rs: &RootSystem, highest: &Weight) -> Result<u128> {
    weyl_dimension(rs, highest)?
        .to_u128()
        .ok_or(Error::Overflow("weyl_dimension"))
}

/// The character of an irreducible module, stored on dominant weights only.
/// Multiplicities are constant on Weyl orbits, so every other weight is
/// looked up through its dominant representative.
#[derive(Clone, Debug)]
pub struct WeightMultiset {
    highest: Weight,
    dominant: Vec<(Weight, Multiplicity)>,
    index: FxHashMap<Weight, Multiplicity>,
}

impl WeightMultiset {
    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    /// Dominant weights with their multiplicities, in descending depth
    /// below the highest weight (highest weight first).
    pub fn dominant_entries(&self) -> &[(Weight, Multiplicity)] {
        &self.dominant
    }

    /// Multiplicity of a dominant weight; zero if it is not a weight.
    pub fn dominant_multiplicity(&self, dominant: &Weight) -> Multiplicity {
        self.index.get(dominant).copied().unwrap_or(0)
    }

    /// Multiplicity of an arbitrary weight.
    pub fn multiplicity(&self, rs: &RootSystem, w: &Weight) -> Multiplicity {
        self.dominant_multiplicity(&rs.to_dominant(w))
    }

    pub fn contains(&self, rs: &RootSystem, w: &Weight) -> bool {
        self.multiplicity(rs, w) > 0
    }

    /// Full weight multiset by Weyl-orbit expansion.
    pub fn expand(&self, rs: &RootSystem) -> BTreeMap<Weight, Multiplicity> {
        let mut out = BTreeMap::new();
        for (w, m) in &self.dominant {
            rs.for_each_in_orbit(w, |x, _| {
                out.insert(x.clone(), *m);
            });
        }
        out
    }

    /// Sum of multiplicities over all weights, which equals the dimension.
    pub fn total_mass(&self, rs: &RootSystem) -> Multiplicity {
        self.dominant
            .iter()
            .map(|(w, m)| {
                let mut size = 0u128;
                rs.for_each_in_orbit(w, |_, _| size += 1);
                m * size
            })
            .sum()
    }
}

impl Serialize for WeightMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut sorted: Vec<_> = self.dominant.iter().collect();
        sorted.sort();
        let mut seq = serializer.serialize_seq(Some(sorted.len()))?;
        for (w, m) in sorted {
            seq.serialize_element(&Entry {
                weight: w,
                multiplicity: *m,
            })?;
        }
        seq.end()
    }
}

#[derive(Serialize)]
pub(crate) struct Entry<'a> {
    pub weight: &'a Weight,
    pub multiplicity: Multiplicity,
}

/// Dominant weights of `V(λ)` together with their depth `ht(λ − μ)`,
/// sorted by depth.
///
/// Any two dominant weights in the same saturated set are joined by a chain
/// of dominant weights differing by positive roots, so a search subtracting
/// positive roots and discarding non-dominant results reaches all of them.
pub(crate) fn dominant_weights_below(rs: &RootSystem, highest: &Weight) -> Vec<(Weight, i32)> {
    let mut seen: FxHashSet<Weight> = FxHashSet::default();
    seen.insert(highest.clone());
    let mut out = vec![(highest.clone(), 0)];
    let mut cursor = 0;
    while cursor < out.len() {
        let (mu, depth) = out[cursor].clone();
        cursor += 1;
        for root in rs.positive_roots() {
            let nu = mu.add_scaled(&root.labels, -1);
            if nu.is_dominant() && seen.insert(nu.clone()) {
                out.push((nu, depth + root.height));
            }
        }
    }
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)));
    out
}

/// Weight multiplicities of `V(λ)` by Freudenthal's recursion
///
/// ```text
/// ((λ+δ, λ+δ) − (μ+δ, μ+δ)) m(μ) = 2 Σ_{α>0} Σ_{i≥1} m(μ+iα) (μ+iα, α)
/// ```
///
/// evaluated on dominant weights in order of increasing depth. Terms with
/// non-dominant `μ+iα` are read off their dominant representative.
pub fn weight_multiplicities(rs: &RootSystem, highest: &Weight) -> Result<WeightMultiset> {
    rs.check_dominant(highest)?;
    let delta = rs.delta();
    let top = highest + &delta;
    let top_norm = rs.scaled_inner(top.labels(), top.labels()) as i128;

    let dominant = dominant_weights_below(rs, highest);
    let mut index: FxHashMap<Weight, Multiplicity> = FxHashMap::default();
    index.reserve(dominant.len());
    let mut entries = Vec::with_capacity(dominant.len());
    let mut probe = Weight::zero(rs.rank());

    for (mu, depth) in dominant {
        let m = if depth == 0 {
            1
        } else {
            let mut rhs: i128 = 0;
            for root in rs.positive_roots() {
                let mut up = mu.clone();
                loop {
                    up.add_scaled_in_place(root.labels.labels(), 1);
                    probe.labels_mut().copy_from_slice(up.labels());
                    rs.to_dominant_in_place(&mut probe);
                    let Some(&mult) = index.get(&probe) else {
                        break;
                    };
                    let pairing = rs.scaled_inner(up.labels(), root.labels.labels()) as i128;
                    rhs = (mult as i128)
                        .checked_mul(pairing)
                        .and_then(|t| rhs.checked_add(t))
                        .ok_or(Error::Overflow("Freudenthal recursion"))?;
                }
            }
            let shifted = &mu + &delta;
            let gap = top_norm - rs.scaled_inner(shifted.labels(), shifted.labels()) as i128;
            debug_assert!(gap > 0);
            let numer = rhs.checked_mul(2).ok_or(Error::Overflow("Freudenthal recursion"))?;
            assert_eq!(numer % gap, 0, "Freudenthal quotient is not integral at {mu}");
            let m = numer / gap;
            assert!(m > 0, "dominant weight {mu} below {highest} has multiplicity {m}");
            m as Multiplicity
        };
        index.insert(mu.clone(), m);
        entries.push((mu, m));
    }

    Ok(WeightMultiset {
        highest: highest.clone(),
        dominant: entries,
        index,
    })
}
