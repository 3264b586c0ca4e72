//! Jet ideals, truncation maps, trivial jets, fibers over trivial jets and
//! induced maps on jets.
//!
//! For `X = V(f_1, ..., f_r)` in `A^N`, the `m`-jet scheme `X_m` lives in
//! `A^{N(m+1)}` with coordinates `x[i][j]` (`0 <= i <= m`, `1 <= j <= N`) and
//! is cut out by the `t`-coefficients `F_{g,0}, ..., F_{g,m}` of every
//! generator.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{expand_in_t, jet_variables, AlgebraError, FieldSpec, JetVar, Poly, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JetError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("generator {0} uses variable {1}, expected x[0][1..={2}]")]
    BadGeneratorVariable(usize, JetVar, u32),
    #[error("generator {0} is the zero polynomial")]
    ZeroGenerator(usize),
    #[error("generator {0} is over {1}, expected {2}")]
    GeneratorField(usize, FieldSpec, FieldSpec),
    #[error("invalid truncation levels: m = {m}, m' = {m_prime}")]
    InvalidRange { m: usize, m_prime: usize },
    #[error("point does not lie on X_{0}")]
    NotOnJetScheme(usize),
    #[error("point does not lie on X")]
    NotOnX,
    #[error("variable {0} is outside the jet coordinate grid")]
    OutOfGrid(JetVar),
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// An ideal `I_X` of `k[x[0][1], ..., x[0][N]]`. An empty generator list is
/// the zero ideal, `X = A^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientIdeal {
    field: FieldSpec,
    n: u32,
    generators: Vec<Poly>,
}

impl AmbientIdeal {
    pub fn new(field: FieldSpec, n: u32, generators: Vec<Poly>) -> Result<Self, JetError> {
        for (g, f) in generators.iter().enumerate() {
            if f.field() != field {
                return Err(JetError::GeneratorField(g, f.field(), field));
            }
            if f.is_zero() {
                return Err(JetError::ZeroGenerator(g));
            }
            if let Some(v) = f.variables().into_iter().find(|v| v.level != 0 || v.index == 0 || v.index > n) {
                return Err(JetError::BadGeneratorVariable(g, v, n));
            }
        }
        Ok(AmbientIdeal { field, n, generators })
    }

    pub fn zero(field: FieldSpec, n: u32) -> Self {
        AmbientIdeal { field, n, generators: Vec::new() }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Ambient dimension `N`.
    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn variables(&self) -> Vec<JetVar> {
        jet_variables(self.n, 0)
    }

    pub fn contains_origin(&self) -> bool {
        self.generators.iter().all(|f| f.constant_term().is_zero())
    }

    pub fn contains_point(&self, x: &[Scalar]) -> bool {
        x.len() == self.n as usize && self.generators.iter().all(|f| f.eval(|v| x[v.index as usize - 1].clone()).is_zero())
    }

    /// `f(x + a)` for every generator, moving the point `a` to the origin.
    pub fn translate(&self, a: &[Scalar]) -> Result<AmbientIdeal, JetError> {
        if a.len() != self.n as usize {
            return Err(JetError::DimensionMismatch { expected: self.n as usize, got: a.len() });
        }
        let field = self.field;
        let gens = self
            .generators
            .iter()
            .map(|f| {
                f.substitute(|v| {
                    let shift = Poly::constant(field, a[v.index as usize - 1].clone());
                    Some(&Poly::var(field, v) + &shift)
                })
            })
            .filter(|f| !f.is_zero())
            .collect();
        AmbientIdeal::new(field, self.n, gens)
    }
}

/// One `F_{g,i}`; `poly` may be zero (vanishing coefficients are kept).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetGenerator {
    pub generator: usize,
    pub level: usize,
    pub poly: Poly,
}

/// The ideal of `X_m` in `A^{N(m+1)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetIdeal {
    base: AmbientIdeal,
    m: usize,
    jet_generators: Vec<JetGenerator>,
}

impl JetIdeal {
    pub fn base(&self) -> &AmbientIdeal {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.m
    }

    /// All `F_{g,i}` ordered by `(g, i)`, zeros included.
    pub fn jet_generators(&self) -> &[JetGenerator] {
        &self.jet_generators
    }

    pub fn get(&self, generator: usize, level: usize) -> Option<&Poly> {
        if level > self.m {
            return None;
        }
        self.jet_generators.get(generator * (self.m + 1) + level).map(|g| &g.poly)
    }

    /// The nonzero `F_{g,i}`, in `(g, i)` order.
    pub fn nonzero_generators(&self) -> Vec<Poly> {
        self.jet_generators.iter().filter(|g| !g.poly.is_zero()).map(|g| g.poly.clone()).collect()
    }

    /// Nonzero `F_{g,i}` with `i <= level`.
    pub fn generators_up_to(&self, level: usize) -> Vec<Poly> {
        self.jet_generators
            .iter()
            .filter(|g| g.level <= level && !g.poly.is_zero())
            .map(|g| g.poly.clone())
            .collect()
    }

    pub fn variables(&self) -> Vec<JetVar> {
        jet_variables(self.base.n, self.m as u32)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.jet_generators.iter().all(|g| g.poly.is_zero())
    }
}

/// The ideal of `X_m`: every `F_{g,i}` with `i <= m`.
pub fn jetify(ideal: &AmbientIdeal, m: usize) -> JetIdeal {
    let mut jet_generators = Vec::with_capacity(ideal.generators.len() * (m + 1));
    for (g, f) in ideal.generators.iter().enumerate() {
        let expansion = expand_in_t(f, m).expect("ambient generators are level 0");
        for (level, poly) in expansion.into_iter().enumerate() {
            jet_generators.push(JetGenerator { generator: g, level, poly });
        }
    }
    JetIdeal { base: ideal.clone(), m, jet_generators }
}

/// A rational point of `A^{N(m+1)}`; absent coordinates are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetPoint {
    field: FieldSpec,
    n: u32,
    m: usize,
    coords: BTreeMap<JetVar, Scalar>,
}

impl JetPoint {
    pub fn origin(field: FieldSpec, n: u32, m: usize) -> Self {
        JetPoint { field, n, m, coords: BTreeMap::new() }
    }

    /// Builds a point from `(variable, value)` pairs on the `(n, m)` grid.
    pub fn from_coords<I>(field: FieldSpec, n: u32, m: usize, coords: I) -> Result<Self, JetError>
    where
        I: IntoIterator<Item = (JetVar, Scalar)>,
    {
        let mut p = JetPoint::origin(field, n, m);
        for (v, c) in coords {
            if v.level as usize > m || v.index == 0 || v.index > n {
                return Err(JetError::OutOfGrid(v));
            }
            if !field.contains(&c) {
                return Err(AlgebraError::NotInField(format!("{c:?}"), field).into());
            }
            p.set(v, c);
        }
        Ok(p)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn get(&self, v: JetVar) -> Scalar {
        self.coords.get(&v).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn set(&mut self, v: JetVar, c: Scalar) {
        if c.is_zero() {
            self.coords.remove(&v);
        } else {
            self.coords.insert(v, c);
        }
    }

    /// `x[0][1..=N]`, the image under `pi_m`.
    pub fn base_point(&self) -> Vec<Scalar> {
        (1..=self.n).map(|j| self.get(JetVar::new(0, j))).collect()
    }

    /// Coefficients `x[0][j], ..., x[m][j]` of the arc in coordinate `j`.
    pub fn arc(&self, j: u32) -> Vec<Scalar> {
        (0..=self.m as u32).map(|i| self.get(JetVar::new(i, j))).collect()
    }

    pub fn lies_on(&self, ideal: &JetIdeal) -> bool {
        self.m == ideal.m
            && self.n == ideal.base.n
            && ideal.jet_generators.iter().all(|g| g.poly.eval(|v| self.get(v)).is_zero())
    }

    fn restrict(&self, m: usize) -> JetPoint {
        JetPoint {
            field: self.field,
            n: self.n,
            m,
            coords: self.coords.iter().filter(|(v, _)| v.level as usize <= m).map(|(v, c)| (*v, c.clone())).collect(),
        }
    }
}

/// `psi_{m',m}` on a rational point of `X_{m'}`.
pub fn truncate_point(ideal: &AmbientIdeal, point: &JetPoint, m: usize) -> Result<JetPoint, JetError> {
    if m > point.m {
        return Err(JetError::InvalidRange { m, m_prime: point.m });
    }
    if point.n != ideal.n {
        return Err(JetError::DimensionMismatch { expected: ideal.n as usize, got: point.n as usize });
    }
    if !point.lies_on(&jetify(ideal, point.m)) {
        return Err(JetError::NotOnJetScheme(point.m));
    }
    Ok(point.restrict(m))
}

/// `sigma_m(x)`: the constant jet at a rational point `x` of `X`.
pub fn trivial_jet(ideal: &AmbientIdeal, x: &[Scalar], m: usize) -> Result<JetPoint, JetError> {
    if x.len() != ideal.n as usize {
        return Err(JetError::DimensionMismatch { expected: ideal.n as usize, got: x.len() });
    }
    if !ideal.contains_point(x) {
        return Err(JetError::NotOnX);
    }
    JetPoint::from_coords(ideal.field, ideal.n, m, x.iter().enumerate().map(|(j, c)| (JetVar::new(0, j as u32 + 1), c.clone())))
}

/// One `F_{g,i}(0, ..., 0, x_{m+1}, ..., x_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberGenerator {
    pub generator: usize,
    pub level: usize,
    pub poly: Poly,
    pub vanishes: bool,
}

/// The ideal of `psi_{m',m}^{-1}(0_m)` in the coordinates `x[m+1..=m']`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberIdeal {
    pub m: usize,
    pub m_prime: usize,
    pub n: u32,
    pub generators: Vec<FiberGenerator>,
}

impl FiberIdeal {
    /// True when every generator vanishes, i.e. the fiber is `A^{N(m'-m)}`.
    pub fn is_free(&self) -> bool {
        self.generators.iter().all(|g| g.vanishes)
    }

    pub fn nonzero_generators(&self) -> Vec<Poly> {
        self.generators.iter().filter(|g| !g.vanishes).map(|g| g.poly.clone()).collect()
    }

    /// Coordinates of the fiber, `x[m+1][1] .. x[m'][N]`.
    pub fn variables(&self) -> Vec<JetVar> {
        jet_variables(self.n, self.m_prime as u32).into_iter().filter(|v| v.level as usize > self.m).collect()
    }

    /// `N (m' - m)`.
    pub fn ambient_dimension(&self) -> usize {
        self.n as usize * (self.m_prime - self.m)
    }
}

/// The fiber of `psi_{m',m}` over the trivial jet `0_m`.
pub fn fiber_over_trivial_jet(ideal: &AmbientIdeal, m: usize, m_prime: usize) -> Result<FiberIdeal, JetError> {
    if m >= m_prime {
        return Err(JetError::InvalidRange { m, m_prime });
    }
    let jets = jetify(ideal, m_prime);
    let generators = jets
        .jet_generators
        .iter()
        .filter(|g| g.level > m)
        .map(|g| {
            let poly = g.poly.filter_terms(|mono| mono.variables().all(|v| v.level as usize > m));
            FiberGenerator { generator: g.generator, level: g.level, vanishes: poly.is_zero(), poly }
        })
        .collect();
    Ok(FiberIdeal { m, m_prime, n: ideal.n, generators })
}

/// `f_m : (A^N)_m -> (A^P)_m` induced by `f = (f_1, ..., f_P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetMorphism {
    field: FieldSpec,
    source_n: u32,
    m: usize,
    /// `components[q][i]` is the coefficient of `t^i` in `f_{q+1}` along the arc.
    components: Vec<Vec<Poly>>,
}

impl JetMorphism {
    pub fn target_dimension(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn source_dimension(&self) -> u32 {
        self.source_n
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn component(&self, q: usize, level: usize) -> &Poly {
        &self.components[q][level]
    }

    /// Image of a jet; `x[i][q]` of the result is component `(q, i)`.
    pub fn apply(&self, point: &JetPoint) -> Result<JetPoint, JetError> {
        if point.n != self.source_n || point.m != self.m {
            return Err(JetError::DimensionMismatch { expected: self.source_n as usize, got: point.n as usize });
        }
        let coords = self.components.iter().enumerate().flat_map(|(q, levels)| {
            levels
                .iter()
                .enumerate()
                .map(move |(i, poly)| (JetVar::new(i as u32, q as u32 + 1), poly.eval(|v| point.get(v))))
        });
        JetPoint::from_coords(self.field, self.target_dimension(), self.m, coords.collect::<Vec<_>>())
    }
}

/// The induced map on `m`-jets of a polynomial map `A^N -> A^P`.
pub fn jet_of_morphism(field: FieldSpec, source_n: u32, f: &[Poly], m: usize) -> Result<JetMorphism, JetError> {
    let mut components = Vec::with_capacity(f.len());
    for (q, fq) in f.iter().enumerate() {
        if fq.field() != field {
            return Err(JetError::GeneratorField(q, fq.field(), field));
        }
        if let Some(v) = fq.variables().into_iter().find(|v| v.level != 0 || v.index == 0 || v.index > source_n) {
            return Err(JetError::BadGeneratorVariable(q, v, source_n));
        }
        let mut levels = expand_in_t(fq, m)?;
        // constants expand with an empty variable set; keep all levels present
        levels.resize(m + 1, Poly::zero(field));
        components.push(levels);
    }
    Ok(JetMorphism { field, source_n, m, components })
}
