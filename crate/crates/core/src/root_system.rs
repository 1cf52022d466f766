//! Cartan data for simple and composite root systems.
//!
//! Node numbering follows the Bourbaki planches:
//!
//! | family | diagram                                             |
//! |--------|-----------------------------------------------------|
//! | A_l    | 1 - 2 - ... - l                                     |
//! | B_l    | 1 - ... - (l-1) => l        (α_l short)             |
//! | C_l    | 1 - ... - (l-1) <= l        (α_l long)              |
//! | D_l    | 1 - ... - (l-2) < (l-1), l  (fork at l-2)           |
//! | E_n    | 1 - 3 - 4 - 5 - ... - n, with 2 attached to 4       |
//! | F_4    | 1 - 2 => 3 - 4              (α_3, α_4 short)        |
//! | G_2    | 1 <= 2                      (α_1 short)             |
//!
//! The Cartan matrix is stored row-wise as `cartan[i][j] = ⟨α_i, α_j^∨⟩`, so
//! row i is the Dynkin-label vector of the simple root α_i. The bilinear form
//! is normalized so that long roots have squared length 2 in every component.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{determinant, smith_normal_form, SmithForm};
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// One simple factor of a (possibly composite) root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let reject = |reason| {
            Err(Error::InvalidComponent {
                family: family.letter(),
                rank,
                reason,
            })
        };
        match family {
            _ if rank == 0 => reject("rank must be positive"),
            Family::B if rank < 2 => reject("type B needs rank >= 2"),
            Family::C if rank < 3 => reject("type C needs rank >= 3"),
            Family::D if rank < 3 => reject("type D needs rank >= 3"),
            Family::E if !(6..=8).contains(&rank) => reject("type E exists only in ranks 6, 7, 8"),
            Family::F if rank != 4 => reject("type F exists only in rank 4"),
            Family::G if rank != 2 => reject("type G exists only in rank 2"),
            _ => Ok(Component { family, rank }),
        }
    }

    /// Type A up to isomorphism: `A_l`, or `D3 ≅ A3`.
    pub fn is_type_a(&self) -> bool {
        self.family == Family::A || (self.family == Family::D && self.rank == 3)
    }

    /// Dimension of the simple Lie algebra.
    pub fn algebra_dimension(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 2),
            Family::B | Family::C => l * (2 * l + 1),
            Family::D => l * (2 * l - 1),
            Family::E => match l {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Whether the longest Weyl element acts as −1 on this component.
    pub fn longest_element_is_minus_one(&self) -> bool {
        match self.family {
            Family::A => self.rank == 1,
            Family::D => self.rank.is_multiple_of(2),
            Family::E => self.rank != 6,
            _ => true,
        }
    }

    fn cartan(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut m = vec![vec![0i64; l]; l];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            m[i - 1][j - 1] = -1;
            m[j - 1][i - 1] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 1..l {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 1..l - 1 {
                    link(i, i + 1);
                }
                link(l - 2, l);
            }
            Family::E => {
                link(1, 3);
                link(2, 4);
                for i in 3..l {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(1, 2);
                link(2, 3);
                link(3, 4);
            }
            Family::G => link(1, 2),
        }
        match self.family {
            // ⟨α_{l-1}, α_l^∨⟩ = -2 with α_l short
            Family::B => m[l - 2][l - 1] = -2,
            Family::C => m[l - 1][l - 2] = -2,
            Family::F => m[1][2] = -2,
            Family::G => m[1][0] = -3,
            _ => {}
        }
        m
    }

    /// Half squared lengths `(α_i, α_i)/2` of the simple roots.
    fn symmetrizer(&self) -> Vec<Ratio<i64>> {
        let l = self.rank;
        let one = Ratio::from_integer(1);
        let half = Ratio::new(1, 2);
        (1..=l)
            .map(|i| match self.family {
                Family::B if i == l => half,
                Family::C if i < l => half,
                Family::F if i >= 3 => half,
                Family::G if i == 1 => Ratio::new(1, 3),
                _ => one,
            })
            .collect()
    }

    /// `−w0` on this component's labels.
    fn dual_labels(&self, a: &[i32]) -> Vec<i32> {
        let l = self.rank;
        match self.family {
            Family::A => a.iter().rev().copied().collect(),
            Family::D if l % 2 == 1 => {
                let mut v = a.to_vec();
                v.swap(l - 2, l - 1);
                v
            }
            Family::E if l == 6 => vec![a[5], a[1], a[4], a[3], a[2], a[0]],
            _ => a.to_vec(),
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A positive root, stored both in Dynkin labels and in simple-root
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub labels: Weight,
    pub coefficients: Vec<i32>,
    pub height: i32,
    /// `(α, α)` times the form scale.
    scaled_norm: i64,
}

/// Invariant factors of `Λ/Λ_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundamentalGroupInfo {
    pub invariant_factors: Vec<i64>,
    pub order: i64,
    pub exponent: i64,
}

impl FundamentalGroupInfo {
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    components: Vec<Component>,
    offsets: Vec<usize>,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Ratio<i64>>,
    /// `scale · (λ_i, λ_j)`, an integer matrix.
    gram: Vec<Vec<i64>>,
    scale: i64,
    positive_roots: Vec<Root>,
    smith: SmithForm,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
    }
}

impl Eq for RootSystem {}

impl RootSystem {
    /// Builds the direct sum of the given components, in order.
    pub fn new(components: &[(Family, usize)]) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument("root system needs at least one component".into()));
        }
        let components = components
            .iter()
            .map(|&(f, r)| Component::new(f, r))
            .collect::<Result<Vec<_>>>()?;
        let rank: usize = components.iter().map(|c| c.rank).sum();

        let mut offsets = Vec::with_capacity(components.len());
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut symmetrizer = Vec::with_capacity(rank);
        let mut off = 0;
        for c in &components {
            offsets.push(off);
            for (i, row) in c.cartan().into_iter().enumerate() {
                cartan[off + i][off..off + c.rank].copy_from_slice(&row);
            }
            symmetrizer.extend(c.symmetrizer());
            off += c.rank;
        }

        let (gram, scale) = fundamental_gram(&cartan, &symmetrizer);
        let smith = smith_normal_form(&cartan);
        let mut rs = RootSystem {
            components,
            offsets,
            rank,
            cartan,
            symmetrizer,
            gram,
            scale,
            positive_roots: Vec::new(),
            smith,
        };
        rs.positive_roots = rs.compute_positive_roots();
        Ok(rs)
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        Self::new(&[(family, rank)])
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Label range `offset..offset + rank` of each component.
    pub fn component_ranges(&self) -> impl Iterator<Item = (Component, std::ops::Range<usize>)> + '_ {
        self.components
            .iter()
            .zip(&self.offsets)
            .map(|(c, &o)| (*c, o..o + c.rank))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[Ratio<i64>] {
        &self.symmetrizer
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    /// Whether every component is of type A, counting `D3 ≅ A3`.
    pub fn all_type_a(&self) -> bool {
        self.components.iter().all(|c| c.is_type_a())
    }

    /// Half-sum of positive roots: all labels equal to 1.
    pub fn delta(&self) -> Weight {
        Weight::new(std::iter::repeat_n(1, self.rank))
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    /// Simple root α_i in Dynkin labels.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new(self.cartan[i].iter().map(|&x| x as i32))
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank {
            return Err(Error::LengthMismatch {
                expected: self.rank,
                found: w.len(),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(())
    }

    pub fn check_root_index(&self, i: usize) -> Result<()> {
        if i >= self.rank {
            return Err(Error::RootIndex {
                index: i,
                rank: self.rank,
            });
        }
        Ok(())
    }

    /// The invariant form `(λ, μ)`.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Result<BigRational> {
        self.check_weight(a)?;
        self.check_weight(b)?;
        Ok(BigRational::new(
            BigInt::from(self.scaled_inner(a.labels(), b.labels())),
            BigInt::from(self.scale),
        ))
    }

    /// `scale · (a, b)` as an exact integer.
    pub(crate) fn scaled_inner(&self, a: &[i32], b: &[i32]) -> i64 {
        let mut acc = 0i64;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let row = &self.gram[i];
            let dot: i64 = b.iter().zip(row).map(|(&y, &g)| y as i64 * g).sum();
            acc += x as i64 * dot;
        }
        acc
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `⟨λ, α^∨⟩ = 2(λ, α)/(α, α)`, always an integer for weights.
    pub fn coroot_pairing(&self, w: &Weight, root: &Root) -> i64 {
        2 * self.scaled_inner(w.labels(), root.labels.labels()) / root.scaled_norm
    }

    fn compute_positive_roots(&self) -> Vec<Root> {
        let n = self.rank;
        let mut known: FxHashSet<Vec<i32>> = FxHashSet::default();
        let mut all: Vec<Vec<i32>> = Vec::new();
        let mut frontier: Vec<Vec<i32>> = (0..n)
            .map(|i| (0..n).map(|j| i32::from(i == j)).collect())
            .collect();
        for r in &frontier {
            known.insert(r.clone());
        }
        while !frontier.is_empty() {
            all.extend(frontier.iter().cloned());
            let mut next = Vec::new();
            for beta in &frontier {
                let labels = self.coeffs_to_labels(beta);
                for i in 0..n {
                    // p = length of the α_i-string below β
                    let mut p = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if known.contains(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - labels[i] > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            frontier = next;
        }
        all.into_iter()
            .map(|coefficients| {
                let labels = Weight::from(self.coeffs_to_labels(&coefficients));
                let scaled_norm = self.scaled_inner(labels.labels(), labels.labels());
                Root {
                    height: coefficients.iter().sum(),
                    labels,
                    coefficients,
                    scaled_norm,
                }
            })
            .collect()
    }

    fn coeffs_to_labels(&self, c: &[i32]) -> Vec<i32> {
        (0..self.rank)
            .map(|k| {
                c.iter()
                    .enumerate()
                    .map(|(j, &cj)| cj * self.cartan[j][k] as i32)
                    .sum()
            })
            .collect()
    }

    /// Simple reflection `s_i` in place.
    #[inline]
    pub(crate) fn reflect_in_place(&self, w: &mut Weight, i: usize) {
        let k = w[i];
        if k != 0 {
            let row = &self.cartan[i];
            for (a, &r) in w.labels_mut().iter_mut().zip(row) {
                *a -= k * r as i32;
            }
        }
    }

    /// Moves `w` into the dominant chamber. Returns the number of simple
    /// reflections used (its parity is the sign of the Weyl element).
    pub fn to_dominant_in_place(&self, w: &mut Weight) -> usize {
        let mut steps = 0;
        while let Some(i) = w.labels().iter().position(|&a| a < 0) {
            self.reflect_in_place(w, i);
            steps += 1;
        }
        steps
    }

    pub fn to_dominant(&self, w: &Weight) -> Weight {
        let mut v = w.clone();
        self.to_dominant_in_place(&mut v);
        v
    }

    /// Visits every element of the Weyl orbit of the dominant weight `w`
    /// exactly once, together with the number of simple reflections along
    /// the path that produced it.
    ///
    /// Each non-dominant orbit element is generated only from its parent
    /// across its first negative label, which makes the traversal a tree.
    pub fn for_each_in_orbit(&self, w: &Weight, mut visit: impl FnMut(&Weight, usize)) {
        let mut stack = vec![(w.clone(), 0usize)];
        while let Some((x, depth)) = stack.pop() {
            visit(&x, depth);
            for i in 0..self.rank {
                let xi = x[i];
                if xi <= 0 {
                    continue;
                }
                let row = &self.cartan[i];
                // child's labels before i must stay nonnegative
                let ok = (0..i).all(|j| x[j] - xi * row[j] as i32 >= 0);
                if ok {
                    let mut y = x.clone();
                    self.reflect_in_place(&mut y, i);
                    stack.push((y, depth + 1));
                }
            }
        }
    }

    pub fn orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut out = Vec::new();
        self.for_each_in_orbit(&self.to_dominant(w), |x, _| out.push(x.clone()));
        out
    }

    /// Order of the Weyl group, via the orbit of the regular weight δ.
    pub fn weyl_group_order(&self) -> usize {
        let mut n = 0;
        self.for_each_in_orbit(&self.delta(), |_, _| n += 1);
        n
    }

    /// `−w0(λ)`, the highest weight of the dual module, from the explicit
    /// per-family formulas.
    pub fn dual_involution(&self, w: &Weight) -> Result<Weight> {
        self.check_weight(w)?;
        let mut out = Vec::with_capacity(self.rank);
        for (c, range) in self.component_ranges() {
            out.extend(c.dual_labels(&w.labels()[range]));
        }
        Ok(Weight::from(out))
    }

    /// `−w0(λ)` computed as the dominant representative of `−λ`. Agrees with
    /// [`dual_involution`](Self::dual_involution) on dominant weights.
    pub fn dual_via_reflection(&self, w: &Weight) -> Weight {
        self.to_dominant(&-w)
    }

    pub fn is_self_dual(&self, w: &Weight) -> Result<bool> {
        Ok(&self.dual_involution(w)? == w)
    }

    /// Whether `−w0 = 1` on every component.
    pub fn longest_element_is_minus_one(&self) -> bool {
        self.components.iter().all(|c| c.longest_element_is_minus_one())
    }

    pub fn fundamental_group(&self) -> FundamentalGroupInfo {
        let invariant_factors: Vec<i64> = self
            .smith
            .diagonal
            .iter()
            .copied()
            .filter(|&d| d != 1)
            .collect();
        let order = invariant_factors.iter().product();
        let exponent = invariant_factors.iter().fold(1i64, |acc, &d| acc.lcm(&d));
        FundamentalGroupInfo {
            invariant_factors,
            order,
            exponent,
        }
    }

    pub fn cartan_determinant(&self) -> i64 {
        determinant(&self.cartan)
    }

    /// Whether `w` lies in the root lattice `Λ_r`.
    pub fn in_root_lattice(&self, w: &Weight) -> Result<bool> {
        self.check_weight(w)?;
        let v: Vec<i64> = w.labels().iter().map(|&a| a as i64).collect();
        Ok(self.smith.row_span_contains(&v))
    }

    /// Writes `w` in simple-root coordinates, if it lies in the root lattice.
    pub fn root_coordinates(&self, w: &Weight) -> Option<Vec<BigRational>> {
        // (λ, λ_j^∨)-style solve: w = c · A  ⇔  c = w · A^{-1}
        let inv = rational_inverse(&self.cartan)?;
        let c: Vec<BigRational> = (0..self.rank)
            .map(|j| {
                (0..self.rank).fold(BigRational::zero(), |acc, k| {
                    acc + BigRational::from_integer(BigInt::from(w[k])) * &inv[k][j]
                })
            })
            .collect();
        Some(c)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses names such as `A2`, `E6`, `A1xA1`.
impl FromStr for RootSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::RootSystemSyntax(s.to_string());
        let parts = s
            .trim()
            .split(['x', 'X', '+'])
            .map(|part| {
                let mut chars = part.trim().chars();
                let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
                let rank = chars.as_str().parse::<usize>().map_err(|_| bad())?;
                Ok((family, rank))
            })
            .collect::<Result<Vec<_>>>()?;
        RootSystem::new(&parts)
    }
}

impl Serialize for RootSystem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootSystem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn rational_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .chain((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }))
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in 0..2 * n {
                    let t = &f * &a[col][k];
                    a[r][k] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// `scale · (λ_i, λ_j)` with the smallest positive integer `scale` making the
/// matrix integral. `(λ_i, λ_j) = d_i (A^{-T})_{ij}`.
fn fundamental_gram(cartan: &[Vec<i64>], sym: &[Ratio<i64>]) -> (Vec<Vec<i64>>, i64) {
    let n = cartan.len();
    let inv = rational_inverse(cartan).expect("Cartan matrices are invertible");
    let exact: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let d = BigRational::new(BigInt::from(*sym[i].numer()), BigInt::from(*sym[i].denom()));
            (0..n).map(|j| &d * &inv[j][i]).collect()
        })
        .collect();
    let scale = exact
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let gram = exact
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let v = (x * BigRational::from_integer(scale.clone())).to_integer();
                    i64::try_from(v).expect("Gram entries fit in i64")
                })
                .collect()
        })
        .collect();
    (gram, i64::try_from(scale).expect("form scale fits in i64"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    #[test]
    fn cartan_examples() {
        assert_eq!(rs("A1").cartan(), &[vec![2]]);
        assert_eq!(rs("A2").cartan(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(rs("A1xA1").cartan(), &[vec![2, 0], vec![0, 2]]);
        assert_eq!(rs("A1xA1").rank(), 2);
        assert_eq!(rs("B2").cartan(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(rs("G2").cartan(), &[vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn bourbaki_numbering() {
        let e6 = rs("E6");
        // node 2 hangs off the branch node 4
        assert_eq!(e6.cartan()[1][3], -1);
        assert_eq!(e6.cartan()[3].iter().filter(|&&x| x == -1).count(), 3);
        let d5 = rs("D5");
        assert_eq!(d5.cartan()[2][3], -1);
        assert_eq!(d5.cartan()[2][4], -1);
        assert_eq!(d5.cartan()[3][4], 0);
        // α_4 = 2λ_4 − λ_3 in D5
        assert_eq!(d5.simple_root(3), Weight::new([0, 0, -1, 2, 0]));
    }

    #[test]
    fn rejects_bad_components() {
        for s in ["B1", "C2", "D2", "E5", "E9", "F3", "G3", "A0", "Q2", "A", ""] {
            assert!(s.parse::<RootSystem>().is_err(), "{s}");
        }
        assert!(RootSystem::new(&[]).is_err());
        assert!("D3".parse::<RootSystem>().is_ok());
    }

    #[test]
    fn inner_product_examples() {
        let a1 = rs("A1");
        let l1 = Weight::new([1]);
        assert_eq!(a1.inner_product(&l1, &l1).unwrap(), BigRational::new(1.into(), 2.into()));
        let a2 = rs("A2");
        let a = a2.simple_root(0);
        assert_eq!(a2.inner_product(&a, &a).unwrap(), BigRational::from_integer(2.into()));
        let z = a2.zero();
        assert!(a2.inner_product(&z, &Weight::new([3, 7])).unwrap().is_zero());
        assert!(a2.inner_product(&z, &Weight::new([3])).is_err());
    }

    #[test]
    fn long_roots_have_norm_two() {
        for name in ["B3", "C4", "F4", "G2", "E6"] {
            let r = rs(name);
            let max = r
                .positive_roots()
                .iter()
                .map(|root| r.inner_product(&root.labels, &root.labels).unwrap())
                .max()
                .unwrap();
            assert_eq!(max, BigRational::from_integer(2.into()), "{name}");
        }
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(rs("A2").positive_roots().len(), 3);
        assert_eq!(rs("G2").positive_roots().len(), 6);
        assert_eq!(rs("A1xA1").positive_roots().len(), 2);
        for name in ["A1", "A4", "B2", "B4", "C3", "D3", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(name);
            let c = r.components()[0];
            assert_eq!(r.positive_roots().len(), (c.algebra_dimension() - c.rank) / 2, "{name}");
        }
    }

    #[test]
    fn delta_pairs_to_one_with_simple_coroots() {
        for name in ["B3", "C3", "F4", "G2", "E6"] {
            let r = rs(name);
            for root in r.positive_roots().iter().filter(|x| x.height == 1) {
                assert_eq!(r.coroot_pairing(&r.delta(), root), 1);
            }
        }
    }

    #[test]
    fn dual_examples() {
        let e6 = rs("E6");
        assert_eq!(
            e6.dual_involution(&Weight::new([1, 0, 0, 0, 0, 0])).unwrap(),
            Weight::new([0, 0, 0, 0, 0, 1])
        );
        let a2 = rs("A2");
        assert_eq!(a2.dual_involution(&Weight::new([1, 0])).unwrap(), Weight::new([0, 1]));
        let b2 = rs("B2");
        let w = Weight::new([3, 1]);
        assert_eq!(b2.dual_involution(&w).unwrap(), w);
        let d5 = rs("D5");
        assert_eq!(
            d5.dual_involution(&Weight::new([1, 2, 3, 4, 5])).unwrap(),
            Weight::new([1, 2, 3, 5, 4])
        );
    }

    #[test]
    fn explicit_dual_matches_reflection_route() {
        for name in ["A1", "A3", "B3", "C3", "D3", "D4", "D5", "E6", "E7", "F4", "G2", "A2xB2"] {
            let r = rs(name);
            for i in 0..r.rank() {
                let mut w = Weight::fundamental(r.rank(), i);
                w.labels_mut()[0] += 1;
                assert_eq!(r.dual_involution(&w).unwrap(), r.dual_via_reflection(&w), "{name} {w}");
            }
        }
    }

    #[test]
    fn weyl_group_orders() {
        assert_eq!(rs("A2").weyl_group_order(), 6);
        assert_eq!(rs("B2").weyl_group_order(), 8);
        assert_eq!(rs("G2").weyl_group_order(), 12);
        assert_eq!(rs("F4").weyl_group_order(), 1152);
        assert_eq!(rs("D4").weyl_group_order(), 192);
        assert_eq!(rs("A1xA1").weyl_group_order(), 4);
    }

    #[test]
    fn orbit_is_duplicate_free() {
        let r = rs("B3");
        let orbit = r.orbit(&Weight::new([1, 0, 1]));
        let set: FxHashSet<_> = orbit.iter().cloned().collect();
        assert_eq!(set.len(), orbit.len());
        assert_eq!(orbit.len(), 24);
    }

    #[test]
    fn fundamental_groups() {
        for l in 1..=6 {
            let pi = RootSystem::simple(Family::A, l).unwrap().fundamental_group();
            assert_eq!(pi.invariant_factors, vec![l as i64 + 1]);
            assert_eq!(pi.exponent, l as i64 + 1);
        }
        assert!(rs("E8").fundamental_group().is_trivial());
        let d4 = rs("D4").fundamental_group();
        assert_eq!(d4.invariant_factors, vec![2, 2]);
        assert_eq!(d4.exponent, 2);
        assert_eq!(rs("D5").fundamental_group().invariant_factors, vec![4]);
        assert_eq!(rs("E6").fundamental_group().order, 3);
        for name in ["A3", "B4", "C3", "D6", "E6", "E7", "E8", "F4", "G2", "A1xA2"] {
            let r = rs(name);
            assert_eq!(r.fundamental_group().order, r.cartan_determinant().abs(), "{name}");
        }
    }

    #[test]
    fn root_lattice_membership() {
        let a2 = rs("A2");
        assert!(a2.in_root_lattice(&Weight::new([1, 1])).unwrap());
        assert!(!a2.in_root_lattice(&Weight::new([1, 0])).unwrap());
        assert!(a2.in_root_lattice(&Weight::new([3, 0])).unwrap());
        let c = a2.root_coordinates(&Weight::new([1, 1])).unwrap();
        assert_eq!(c, vec![BigRational::one(), BigRational::one()]);
    }

    #[test]
    fn symmetrized_cartan_is_symmetric() {
        for name in ["B3", "C3", "F4", "G2", "A1xG2"] {
            let r = rs(name);
            let n = r.rank();
            for i in 0..n {
                for j in 0..n {
                    let a = Ratio::from_integer(r.cartan()[i][j]) * r.symmetrizer()[j];
                    let b = Ratio::from_integer(r.cartan()[j][i]) * r.symmetrizer()[i];
                    assert_eq!(a, b, "{name}");
                    assert_eq!(r.cartan()[i][j] == 0, r.cartan()[j][i] == 0);
                }
            }
        }
    }

    #[test]
    fn display_round_trip() {
        for s in ["A2", "D5", "A1xA1", "E6xG2"] {
            assert_eq!(rs(s).to_string(), s);
        }
    }
}
