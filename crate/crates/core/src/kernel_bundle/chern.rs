use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monodromy::rational_string;

/// `Σ c_i h^i` in `Z[h]/h^{n+1}`, the Chow ring of `P^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChowClass {
    pub ambient_dim: usize,
    #[serde(serialize_with = "big_ints")]
    pub coefficients: Vec<BigInt>,
}

fn big_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl ChowClass {
    pub fn one(n: usize) -> Self {
        let mut coefficients = vec![BigInt::zero(); n + 1];
        coefficients[0] = BigInt::one();
        ChowClass { ambient_dim: n, coefficients }
    }

    /// `1 + a·h`.
    pub fn linear(n: usize, a: i64) -> Self {
        let mut c = Self::one(n);
        if n >= 1 {
            c.coefficients[1] = BigInt::from(a);
        }
        c
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coefficients.get(i).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.ambient_dim;
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, x) in self.coefficients.iter().enumerate() {
            for (j, y) in other.coefficients.iter().enumerate().take(n + 1 - i) {
                out[i + j] += x * y;
            }
        }
        ChowClass { ambient_dim: n, coefficients: out }
    }

    /// Inverse of `1 + a·h`, i.e. `Σ (−a)^k h^k`.
    pub fn inverse_linear(n: usize, a: i64) -> Self {
        let mut coefficients = Vec::with_capacity(n + 1);
        let mut x = BigInt::one();
        for _ in 0..=n {
            coefficients.push(x.clone());
            x *= -a;
        }
        ChowClass { ambient_dim: n, coefficients }
    }

    /// `c_i ↦ (−1)^i c_i`, the total Chern class of the dual.
    pub fn dual(&self) -> Self {
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
            .collect();
        ChowClass { ambient_dim: self.ambient_dim, coefficients }
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·h")?,
                _ => write!(f, "{c}·h^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    /// `0 → E → ⊕O(a_i) → ⊕O(b_j) → 0`
    Kernel,
    /// `0 → ⊕O(a_i) → ⊕O(b_j) → E → 0`
    Cokernel,
}

/// A bundle on `P^n` given by a two-term presentation by sums of line
/// bundles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct KernelBundleSpec {
    pub n: usize,
    pub form: Form,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

#[derive(Deserialize)]
struct RawSpec {
    n: usize,
    form: Form,
    a: Vec<i64>,
    #[serde(default)]
    b: Vec<i64>,
}

impl TryFrom<RawSpec> for KernelBundleSpec {
    type Error = Error;

    fn try_from(r: RawSpec) -> Result<Self> {
        KernelBundleSpec::new(r.n, r.form, r.a, r.b)
    }
}

impl KernelBundleSpec {
    pub fn new(n: usize, form: Form, a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("ambient dimension must be positive".into()));
        }
        let rank_ok = match form {
            Form::Kernel => a.len() > b.len(),
            Form::Cokernel => b.len() > a.len(),
        };
        if !rank_ok {
            return Err(Error::InvalidArgument(format!(
                "{} presentation with |a| = {} and |b| = {} has no positive rank",
                form.name(),
                a.len(),
                b.len()
            )));
        }
        Ok(KernelBundleSpec { n, form, a, b })
    }

    pub fn kernel(n: usize, a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        Self::new(n, Form::Kernel, a, b)
    }

    pub fn cokernel(n: usize, a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        Self::new(n, Form::Cokernel, a, b)
    }

    /// `Syz(X², Y², pZ² + XY)(3)` on the projective plane.
    pub fn example_syzygy() -> Self {
        Self::kernel(2, vec![1, 1, 1], vec![3]).expect("valid presentation")
    }

    pub fn rank(&self) -> usize {
        self.a.len().abs_diff(self.b.len())
    }

    /// Presentation of the dual bundle: dualizing swaps the two sums and
    /// negates the twists, turning a kernel into a cokernel and back.
    pub fn dual(&self) -> Self {
        let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
        let form = match self.form {
            Form::Kernel => Form::Cokernel,
            Form::Cokernel => Form::Kernel,
        };
        KernelBundleSpec { n: self.n, form, a: neg(&self.b), b: neg(&self.a) }
    }

    /// Twists of the sum containing `E` as a subbundle or quotient, then the
    /// other sum: `(a, b)` for kernels and `(b, a)` for cokernels.
    fn numerator_denominator(&self) -> (&[i64], &[i64]) {
        match self.form {
            Form::Kernel => (&self.a, &self.b),
            Form::Cokernel => (&self.b, &self.a),
        }
    }
}

impl Form {
    pub fn name(self) -> &'static str {
        match self {
            Form::Kernel => "kernel",
            Form::Cokernel => "cokernel",
        }
    }
}

impl fmt::Display for KernelBundleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sum = |v: &[i64]| {
            if v.is_empty() {
                "0".to_string()
            } else {
                v.iter().map(|x| format!("O({x})")).collect::<Vec<_>>().join(" + ")
            }
        };
        match self.form {
            Form::Kernel => write!(f, "0 → E → {} → {} → 0 on P^{}", sum(&self.a), sum(&self.b), self.n),
            Form::Cokernel => write!(f, "0 → {} → {} → E → 0 on P^{}", sum(&self.a), sum(&self.b), self.n),
        }
    }
}

/// `c(E)` as a quotient of products of `1 + t·h`, truncated at `h^{n+1}`.
pub fn total_chern(spec: &KernelBundleSpec) -> ChowClass {
    let n = spec.n;
    let (num, den) = spec.numerator_denominator();
    let mut c = ChowClass::one(n);
    for &t in num {
        c = c.mul(&ChowClass::linear(n, t));
    }
    for &t in den {
        c = c.mul(&ChowClass::inverse_linear(n, t));
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericInvariants {
    pub rank: usize,
    #[serde(serialize_with = "big_int")]
    pub c1: BigInt,
    #[serde(serialize_with = "rational_string")]
    pub slope: BigRational,
    /// Absent on `P^1`, where `h² = 0`.
    #[serde(serialize_with = "opt_big_int")]
    pub c2: Option<BigInt>,
    #[serde(serialize_with = "opt_big_int")]
    pub discriminant: Option<BigInt>,
}

pub(crate) fn big_int<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn opt_big_int<S: serde::Serializer>(x: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

/// Rank, degree, slope and, on `P^n` with `n ≥ 2`, `c_2` and the
/// discriminant `Δ = 2r·c_2 − (r−1)·c_1²`.
pub fn numeric_invariants(spec: &KernelBundleSpec) -> NumericInvariants {
    let c = total_chern(spec);
    let r = spec.rank();
    let c1 = c.coefficient(1);
    let slope = BigRational::new(c1.clone(), BigInt::from(r));
    let (c2, discriminant) = if spec.n >= 2 {
        let c2 = c.coefficient(2);
        let d = BigInt::from(2 * r) * &c2 - BigInt::from(r - 1) * &c1 * &c1;
        (Some(c2), Some(d))
    } else {
        (None, None)
    };
    NumericInvariants { rank: r, c1, slope, c2, discriminant }
}

pub fn discriminant(spec: &KernelBundleSpec) -> Result<BigInt> {
    numeric_invariants(spec).discriminant.ok_or_else(|| {
        Error::InvalidArgument(format!("the discriminant needs c_2, which vanishes on P^{}", spec.n))
    })
}
