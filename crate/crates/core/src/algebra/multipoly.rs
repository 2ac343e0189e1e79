//! Sparse multivariate polynomials over the rationals, with a variable
//! list fixed at construction.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// An ordered, immutable list of variable names shared by a family of
/// polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new(names: &[&str]) -> Self {
        VarSet(Arc::new(names.iter().map(|s| s.to_string()).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Multivariate polynomial: a map from exponent tuples to nonzero rational
/// coefficients. All arithmetic requires operands over the same [`VarSet`].
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: VarSet,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MultiPoly {
    pub fn zero(vars: &VarSet) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, BigRational::one())
    }

    /// The variable with the given name, as a polynomial.
    pub fn var(vars: &VarSet, name: &str) -> Self {
        let idx = vars
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown variable {name:?} in {vars:?}"));
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(exps, BigRational::one());
        p
    }

    /// Build from (coefficient, exponents) pairs; zero coefficients are
    /// dropped, duplicate exponent tuples are summed.
    pub fn from_terms(vars: &VarSet, terms: &[(BigRational, Vec<u32>)]) -> Self {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            assert_eq!(e.len(), vars.len(), "exponent tuple has wrong arity");
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// If the polynomial is constant, return that constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Coefficient of the monomial with the given exponent tuple.
    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Coefficient by named exponents; variables not mentioned must have
    /// exponent zero.
    pub fn coeff_named(&self, named: &[(&str, u32)]) -> BigRational {
        let mut exps = vec![0u32; self.vars.len()];
        for (name, e) in named {
            let idx = self
                .vars
                .index_of(name)
                .unwrap_or_else(|| panic!("unknown variable {name:?}"));
            exps[idx] = *e;
        }
        self.coeff(&exps)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Total degree in the variable with the given index.
    pub fn degree_in(&self, var_idx: usize) -> u32 {
        self.terms.keys().map(|e| e[var_idx]).max().unwrap_or(0)
    }

    fn assert_compatible(&self, rhs: &Self) {
        assert!(
            self.vars == rhs.vars,
            "polynomials over different variable lists"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute each source variable by the image polynomial over a
    /// target variable list.
    pub fn substitute(&self, target: &VarSet, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        for img in images {
            assert!(img.vars == *target, "image over wrong variable list");
        }
        let mut out = MultiPoly::zero(target);
        for (exps, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (idx, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[idx].pow(e));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = BigRational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exps) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(exps, c)| {
                let mut s = format!("({c})");
                for (idx, &e) in exps.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!("*{}", names[idx])),
                        _ => s.push_str(&format!("*{}^{}", names[idx], e)),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
