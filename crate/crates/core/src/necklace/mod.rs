//! Exact trace recursions for products of projections: reconstruction of
//! `Tr (ABA)^k` from centered mixed traces, the error terms against the
//! limiting moments, and the binomial closed form available when
//! `beta = 1/2`.
//!
//! The recursions are deterministic identities valid for any pair of
//! projections at any finite dimension. They run over a scalar field
//! abstraction so the same code path serves exact rational inputs (where
//! the identities are asserted with structural equality) and floating
//! point inputs from measured ensembles.

mod ratmat;

use num_rational::BigRational;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::algebra::{binomial, rat, rat_to_f64};
use crate::ensembles::ComplexMatrix;
use crate::error::{Error, Result};
use crate::genfunc::coupling_table;
use crate::manova::{moments_exact, ManovaParams};

pub use ratmat::RatMatrix;

/// Scalar field the recursions run over: exact rationals or `f64`.
pub trait TraceScalar: Clone + std::fmt::Debug {
    fn scalar_zero() -> Self;
    fn from_rat(r: &BigRational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

impl TraceScalar for BigRational {
    fn scalar_zero() -> Self {
        Zero::zero()
    }
    fn from_rat(r: &BigRational) -> Self {
        r.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl TraceScalar for f64 {
    fn scalar_zero() -> Self {
        0.0
    }
    fn from_rat(r: &BigRational) -> Self {
        rat_to_f64(r)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

/// Measured inputs to the recursions: the dimension, the plain traces of
/// both projections, and the centered mixed traces
/// `Tr ((A - alpha I)(B - beta I))^l` for `l = 1..=K`.
#[derive(Clone, Debug)]
pub struct TraceData<T: TraceScalar> {
    pub n: usize,
    pub tr_a: T,
    pub tr_b: T,
    /// `mixed[l-1] = Tr ((A - alpha I)(B - beta I))^l`.
    pub mixed: Vec<T>,
    pub params: ManovaParams,
}

impl<T: TraceScalar> TraceData<T> {
    fn require_order(&self, k_max: usize) -> Result<()> {
        if self.mixed.len() < k_max {
            return Err(Error::InsufficientData(format!(
                "recursion to order {k_max} needs mixed traces through order {k_max}, \
                 missing order {}",
                self.mixed.len() + 1
            )));
        }
        Ok(())
    }
}

/// The coefficient pair of the centered-projection power reduction
/// `(B~/beta)^k = c_k (B~/beta) + d_k I` with `eta = 1/beta - 1`:
/// `c_0 = 0`, `d_0 = 1`, then `c_k = (eta - 1) c_{k-1} + d_{k-1}` and
/// `d_k = eta c_{k-1}`.
#[derive(Clone, Debug)]
pub struct NecklaceCoefficients {
    pub eta: BigRational,
    pub c: Vec<BigRational>,
    pub d: Vec<BigRational>,
}

impl NecklaceCoefficients {
    pub fn new(beta: &BigRational, k_max: usize) -> Self {
        let eta = beta.recip() - BigRational::one();
        let mut c = vec![BigRational::zero()];
        let mut d = vec![BigRational::one()];
        let eta_minus_one = &eta - BigRational::one();
        for k in 1..=k_max {
            c.push(&eta_minus_one * &c[k - 1] + &d[k - 1]);
            d.push(&eta * &c[k - 1]);
        }
        NecklaceCoefficients { eta, c, d }
    }

    /// The closed forms `c_k = sum_{j=0}^{k-1} (-1)^{k-1-j} eta^j` and
    /// `d_k = c_k + (-1)^k`, checked against the recursion values.
    pub fn closed_forms_hold(&self) -> bool {
        for k in 0..self.c.len() {
            let mut c_closed = BigRational::zero();
            let mut eta_pow = BigRational::one();
            for j in 0..k {
                let signed = if (k - 1 - j) % 2 == 0 {
                    eta_pow.clone()
                } else {
                    -eta_pow.clone()
                };
                c_closed += signed;
                eta_pow *= &self.eta;
            }
            let d_closed = &c_closed + rat(if k % 2 == 0 { 1 } else { -1 }, 1);
            if self.c[k] != c_closed || self.d[k] != d_closed {
                return false;
            }
        }
        true
    }
}

/// Shared state for one run of the recursions.
struct RecursionContext<T: TraceScalar> {
    /// `coupling[k][a] = sum_j (-alpha)^{k-j} q_{k,j,a}(eta)` in `T`.
    coupling: Vec<Vec<T>>,
    alpha: BigRational,
    beta: BigRational,
}

impl<T: TraceScalar> RecursionContext<T> {
    fn new(params: &ManovaParams, k_max: usize) -> Result<Self> {
        let table = coupling_table(k_max, params.alpha(), &params.eta())?;
        let coupling = table
            .iter()
            .map(|row| row.iter().map(|v| T::from_rat(v)).collect())
            .collect();
        Ok(RecursionContext {
            coupling,
            alpha: params.alpha().clone(),
            beta: params.beta().clone(),
        })
    }

    /// `alpha^k * sum_{b=lo}^{k-1} (1 - 1/beta)^b` as an exact rational.
    fn alpha_geometric(&self, k: usize, lo: usize) -> BigRational {
        let base = BigRational::one() - self.beta.recip();
        let mut alpha_pow = BigRational::one();
        for _ in 0..k {
            alpha_pow *= &self.alpha;
        }
        let mut base_pow = BigRational::one();
        let mut geo = BigRational::zero();
        for b in 0..k {
            if b >= lo {
                geo += &base_pow;
            }
            base_pow *= &base;
        }
        alpha_pow * geo
    }

    /// Run the centered recursion
    ///
    /// `u_k = [n term] + alpha^k/beta (sum of (1-1/beta)^b) (TrB - beta N)
    ///        - sum_a u_a coupling[k][a] + beta^{-k} mixed_k`
    ///
    /// from the given `u_0`. The pure-`N` term is present in the trace
    /// recursion and cancels in the error recursion.
    fn centered_sequence(
        &self,
        data: &TraceData<T>,
        k_max: usize,
        u0: T,
        include_n_term: bool,
    ) -> Vec<T> {
        let n_rat = BigRational::from_integer((data.n as i64).into());
        let trb_centered = data.tr_b.sub(&T::from_rat(&(&self.beta * &n_rat)));
        let mut seq = vec![u0];
        let mut beta_pow_inv = BigRational::one();
        for k in 1..=k_max {
            beta_pow_inv /= &self.beta;
            let mut value = T::scalar_zero();
            if include_n_term {
                value = value.add(&T::from_rat(&(self.alpha_geometric(k, 1) * &n_rat)));
            }
            let trb_coeff = self.alpha_geometric(k, 0) / &self.beta;
            value = value.add(&trb_centered.mul(&T::from_rat(&trb_coeff)));
            for (a, u) in seq.iter().enumerate().take(k) {
                value = value.sub(&u.mul(&self.coupling[k][a]));
            }
            value = value.add(&data.mixed[k - 1].mul(&T::from_rat(&beta_pow_inv)));
            seq.push(value);
        }
        seq
    }

    /// Binomial resummation `out_k = beta^k sum_l binom(k,l) u_l`.
    fn binomial_resum(&self, seq: &[T], k_max: usize) -> Vec<T> {
        let mut out = Vec::with_capacity(k_max);
        let mut beta_pow = BigRational::one();
        for k in 1..=k_max {
            beta_pow *= &self.beta;
            let mut sum = T::scalar_zero();
            for (l, u) in seq.iter().enumerate().take(k + 1) {
                let c = BigRational::from(binomial(k as u64, l as u64));
                sum = sum.add(&u.mul(&T::from_rat(&c)));
            }
            out.push(sum.mul(&T::from_rat(&beta_pow)));
        }
        out
    }
}

/// Reconstruct `Tr (ABA)^k` for `k = 1..=k_max` from the trace data
/// alone. Exact on rational inputs.
pub fn necklace_predict<T: TraceScalar>(data: &TraceData<T>, k_max: usize) -> Result<Vec<T>> {
    data.require_order(k_max)?;
    let ctx = RecursionContext::new(&data.params, k_max)?;
    let seq = ctx.centered_sequence(data, k_max, data.tr_a.clone(), true);
    Ok(ctx.binomial_resum(&seq, k_max))
}

/// Error terms of the trace against the limiting moments.
#[derive(Clone, Debug)]
pub struct ErrorTerms<T: TraceScalar> {
    /// `Delta_k = Tr (ABA)^k - m_k N` for `k = 1..=K`.
    pub delta: Vec<T>,
    /// Centered sequence `Delta~_0 .. Delta~_K`.
    pub delta_tilde: Vec<T>,
}

/// Run the error-term recursion: `Delta~_0 = TrA - alpha N`, the same
/// coupling sums as the trace recursion without the pure-`N` term, and
/// `Delta_k = beta^k sum_l binom(k,l) Delta~_l`.
pub fn error_terms<T: TraceScalar>(data: &TraceData<T>, k_max: usize) -> Result<ErrorTerms<T>> {
    data.require_order(k_max)?;
    let ctx = RecursionContext::new(&data.params, k_max)?;
    let n_rat = BigRational::from_integer((data.n as i64).into());
    let d0 = data
        .tr_a
        .sub(&T::from_rat(&(data.params.alpha() * &n_rat)));
    let delta_tilde = ctx.centered_sequence(data, k_max, d0, false);
    let delta = ctx.binomial_resum(&delta_tilde, k_max);
    Ok(ErrorTerms { delta, delta_tilde })
}

/// The `beta = 1/2` closed form of the error terms.
#[derive(Clone, Debug)]
pub struct KmDeltas<T: TraceScalar> {
    /// `delta~_0 .. delta~_K`: reflection-side traces with the parity
    /// correction terms.
    pub delta_small: Vec<T>,
    /// `Delta~_k` reconstructed through the binomial closed form
    /// `sum_{a = k mod 2} binom(k, (k+a)/2) (alpha(1-alpha))^{(k-a)/2}
    /// delta~_a`.
    pub delta_tilde: Vec<T>,
}

/// Closed form for the centered error terms when `beta = 1/2`. The
/// reflection traces `Tr ((A - alpha I)(2B - I))^k` equal `2^k` times the
/// stored mixed traces.
pub fn km_deltas<T: TraceScalar>(data: &TraceData<T>, k_max: usize) -> Result<KmDeltas<T>> {
    if data.params.beta() != &rat(1, 2) {
        return Err(Error::InvalidParameter(
            "the binomial closed form requires beta = 1/2 exactly".into(),
        ));
    }
    data.require_order(k_max)?;
    let alpha = data.params.alpha();
    let n_rat = BigRational::from_integer((data.n as i64).into());
    let tra_centered = data.tr_a.sub(&T::from_rat(&(alpha * &n_rat)));
    let trb_centered = data.tr_b.sub(&T::from_rat(&(&n_rat * rat(1, 2))));

    let mut delta_small = vec![tra_centered.clone()];
    let mut two_pow = BigRational::one();
    let mut alpha_pow = BigRational::one();
    for k in 1..=k_max {
        two_pow *= rat(2, 1);
        alpha_pow *= alpha;
        let reflection_trace = data.mixed[k - 1].mul(&T::from_rat(&two_pow));
        let correction_scale = T::from_rat(&(rat(2, 1) * &alpha_pow));
        let correction = if k % 2 == 0 {
            tra_centered.mul(&correction_scale)
        } else {
            trb_centered.mul(&correction_scale)
        };
        delta_small.push(reflection_trace.add(&correction));
    }

    let aw = alpha * (BigRational::one() - alpha); // alpha (1 - alpha)
    let mut delta_tilde = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mut sum = T::scalar_zero();
        let mut a = k % 2;
        if k == 0 {
            a = 0;
        }
        while a <= k {
            let mut coeff = BigRational::from(binomial(k as u64, ((k + a) / 2) as u64));
            for _ in 0..(k - a) / 2 {
                coeff *= &aw;
            }
            sum = sum.add(&delta_small[a].mul(&T::from_rat(&coeff)));
            a += 2;
        }
        delta_tilde.push(sum);
    }
    Ok(KmDeltas {
        delta_small,
        delta_tilde,
    })
}

/// Exact moment predictions `m_k N + Delta_k`, for checking the identity
/// `Tr (ABA)^k = m_k N + Delta_k` against `necklace_predict`.
pub fn moment_prediction<T: TraceScalar>(data: &TraceData<T>, k_max: usize) -> Result<Vec<T>> {
    let errors = error_terms(data, k_max)?;
    let moments = moments_exact(&data.params, k_max)?;
    let n_rat = BigRational::from_integer((data.n as i64).into());
    Ok(errors
        .delta
        .iter()
        .zip(&moments.values)
        .map(|(d, m)| d.add(&T::from_rat(&(m * &n_rat))))
        .collect())
}

/// Exact mixed traces of a pair of rational symmetric idempotent
/// matrices.
pub fn mixed_traces_exact(
    a: &RatMatrix,
    b: &RatMatrix,
    params: &ManovaParams,
    k_max: usize,
) -> Result<TraceData<BigRational>> {
    if a.dim() != b.dim() {
        return Err(Error::MatrixPrecondition(
            "projections must have equal dimension".into(),
        ));
    }
    for (name, m) in [("A", a), ("B", b)] {
        if !m.is_symmetric() || !m.is_idempotent() {
            return Err(Error::MatrixPrecondition(format!(
                "matrix {name} is not an exact orthogonal projection"
            )));
        }
    }
    let n = a.dim();
    let id = RatMatrix::identity(n);
    let a_centered = a.sub(&id.scale(params.alpha()));
    let b_centered = b.sub(&id.scale(params.beta()));
    let step = a_centered.mul(&b_centered);
    let mut mixed = Vec::with_capacity(k_max);
    let mut power = step.clone();
    for k in 1..=k_max {
        mixed.push(power.trace());
        if k < k_max {
            power = power.mul(&step);
        }
    }
    Ok(TraceData {
        n,
        tr_a: a.trace(),
        tr_b: b.trace(),
        mixed,
        params: params.clone(),
    })
}

/// Mixed traces of a measured pair of complex projection matrices.
/// Traces of powers of the product of two Hermitian matrices are real;
/// the imaginary residue is checked against roundoff scale and dropped.
pub fn mixed_traces(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    params: &ManovaParams,
    k_max: usize,
) -> Result<TraceData<f64>> {
    if a.dim() != b.dim() {
        return Err(Error::MatrixPrecondition(
            "projections must have equal dimension".into(),
        ));
    }
    a.require_projection("A")?;
    b.require_projection("B")?;
    let n = a.dim();
    let id = nalgebra::DMatrix::<Complex64>::identity(n, n);
    let a_centered = &a.data - &id * Complex64::new(params.alpha_f64(), 0.0);
    let b_centered = &b.data - &id * Complex64::new(params.beta_f64(), 0.0);
    let step = &a_centered * &b_centered;
    let mut mixed = Vec::with_capacity(k_max);
    let mut power = step.clone();
    for k in 1..=k_max {
        let tr: Complex64 = power.diagonal().iter().sum();
        if tr.im.abs() > 1e-7 * n as f64 {
            return Err(Error::Numerical(format!(
                "mixed trace at order {k} has imaginary part {:.3e}",
                tr.im
            )));
        }
        mixed.push(tr.re);
        if k < k_max {
            power *= &step;
        }
    }
    Ok(TraceData {
        n,
        tr_a: a.trace_re(),
        tr_b: b.trace_re(),
        mixed,
        params: params.clone(),
    })
}
