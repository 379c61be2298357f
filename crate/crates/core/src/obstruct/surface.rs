use std::fmt;

use thiserror::Error;

use crate::fpgroup::{b2_upper_bound, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("non-orientable surfaces need at least one crosscap")]
    NoCrosscaps,
    #[error("surface type {surface} has Euler characteristic {chi}, but k = {k} requires {expected}")]
    EulerMismatch {
        surface: SurfaceType,
        chi: i64,
        k: usize,
        expected: i64,
    },
    #[error("certificate rank {rank} exceeds the presentation bound b2 <= {bound}")]
    CertificateExceedsBound { rank: usize, bound: usize },
    #[error("normal Euler number {e} is not realized by an unknotted {surface}")]
    InvalidNormalEuler { surface: SurfaceType, e: i64 },
    #[error("connected sum of no surfaces")]
    EmptySum,
    #[error("certificate rank {rank} exceeds b2 = {b2} of the branched cover")]
    CertificateExceedsB2 { rank: usize, b2: usize },
    #[error("no spherical-class rule for the core surface {0}")]
    NoSphericalClassRule(String),
    #[error("a sphere has no proper unknotted summand to split off")]
    SphereInput,
    #[error("{0} is not a Klein bottle built as a ribbon double")]
    NotKleinBottle(String),
    #[error("the number of summands must be at least 1")]
    NoSummands,
    #[error(transparent)]
    Pretzel(#[from] crate::pretzel::PretzelError),
}

/// Topological type of a closed connected surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceType {
    Orientable { genus: u32 },
    NonOrientable { crosscaps: u32 },
}

impl SurfaceType {
    pub const SPHERE: SurfaceType = SurfaceType::Orientable { genus: 0 };
    pub const TORUS: SurfaceType = SurfaceType::Orientable { genus: 1 };
    pub const PROJECTIVE_PLANE: SurfaceType = SurfaceType::NonOrientable { crosscaps: 1 };
    pub const KLEIN_BOTTLE: SurfaceType = SurfaceType::NonOrientable { crosscaps: 2 };

    pub fn orientable(genus: u32) -> Self {
        SurfaceType::Orientable { genus }
    }

    pub fn nonorientable(crosscaps: u32) -> Result<Self, SurfaceError> {
        if crosscaps == 0 {
            return Err(SurfaceError::NoCrosscaps);
        }
        Ok(SurfaceType::NonOrientable { crosscaps })
    }

    pub fn is_orientable(&self) -> bool {
        matches!(self, SurfaceType::Orientable { .. })
    }

    pub fn euler_characteristic(&self) -> i64 {
        match *self {
            SurfaceType::Orientable { genus } => 2 - 2 * genus as i64,
            SurfaceType::NonOrientable { crosscaps } => 2 - crosscaps as i64,
        }
    }

    pub fn connected_sum(self, other: SurfaceType) -> SurfaceType {
        use SurfaceType::*;
        match (self, other) {
            (Orientable { genus: a }, Orientable { genus: b }) => Orientable { genus: a + b },
            (NonOrientable { crosscaps: a }, NonOrientable { crosscaps: b }) => NonOrientable { crosscaps: a + b },
            (Orientable { genus }, NonOrientable { crosscaps })
            | (NonOrientable { crosscaps }, Orientable { genus }) => NonOrientable {
                crosscaps: crosscaps + 2 * genus,
            },
        }
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SurfaceType::TORUS => f.write_str("torus"),
            SurfaceType::KLEIN_BOTTLE => f.write_str("klein"),
            SurfaceType::Orientable { genus } => write!(f, "orientable g={genus}"),
            SurfaceType::NonOrientable { crosscaps } => write!(f, "nonorientable c={crosscaps}"),
        }
    }
}

/// Where a value of `rk H_2(π1)` comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Literature(String),
    /// `H_2` of a free product is the direct sum of the factors' `H_2`.
    FreeProductAdditivity(Vec<H2Certificate>),
    /// Supplied only to explore a hypothetical.
    AssumedForWhatIf(String),
}

/// Certified rank of `H_2` of the cover's fundamental group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H2Certificate {
    pub rank: usize,
    pub provenance: Provenance,
}

impl H2Certificate {
    pub fn literature(rank: usize, source: impl Into<String>) -> Self {
        H2Certificate {
            rank,
            provenance: Provenance::Literature(source.into()),
        }
    }

    pub fn assumed(rank: usize, note: impl Into<String>) -> Self {
        H2Certificate {
            rank,
            provenance: Provenance::AssumedForWhatIf(note.into()),
        }
    }

    /// Certificate for a free product; the rank is the sum of the factors'.
    pub fn free_product(parts: Vec<H2Certificate>) -> Self {
        if parts.len() == 1 {
            return parts.into_iter().next().expect("one part");
        }
        H2Certificate {
            rank: parts.iter().map(|c| c.rank).sum(),
            provenance: Provenance::FreeProductAdditivity(parts),
        }
    }
}

impl fmt::Display for H2Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.provenance {
            Provenance::Literature(s) => write!(f, "rank {} ({s})", self.rank),
            Provenance::AssumedForWhatIf(s) => write!(f, "rank {} (assumed: {s})", self.rank),
            Provenance::FreeProductAdditivity(parts) => {
                write!(f, "rank {} (free-product additivity over ", self.rank)?;
                let ranks: Vec<String> = parts.iter().map(|p| p.rank.to_string()).collect();
                write!(f, "{})", ranks.join(" + "))
            }
        }
    }
}

/// Closed surface obtained by doubling a ribbon surface in the four-ball.
/// Its normal Euler number is 0 and `b2` of its branched double cover is `2k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonDouble {
    name: String,
    surface_type: SurfaceType,
    k: usize,
    cover_pi1: Presentation,
    h2_cert: H2Certificate,
    notes: Vec<String>,
}

impl RibbonDouble {
    /// Fails unless `χ = 2 - 2k` for the given type and the certificate rank
    /// is at most the presentation bound on `b2(π1)`.
    pub fn new(
        name: impl Into<String>,
        surface_type: SurfaceType,
        k: usize,
        cover_pi1: Presentation,
        h2_cert: H2Certificate,
    ) -> Result<Self, SurfaceError> {
        let chi = surface_type.euler_characteristic();
        let expected = 2 - 2 * k as i64;
        if chi != expected {
            return Err(SurfaceError::EulerMismatch {
                surface: surface_type,
                chi,
                k,
                expected,
            });
        }
        let bound = b2_upper_bound(&cover_pi1);
        if h2_cert.rank > bound {
            return Err(SurfaceError::CertificateExceedsBound {
                rank: h2_cert.rank,
                bound,
            });
        }
        Ok(RibbonDouble {
            name: name.into(),
            surface_type,
            k,
            cover_pi1,
            h2_cert,
            notes: Vec::new(),
        })
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn surface_type(&self) -> SurfaceType {
        self.surface_type
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cover_pi1(&self) -> &Presentation {
        &self.cover_pi1
    }

    pub fn h2_cert(&self) -> &H2Certificate {
        &self.h2_cert
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn normal_euler(&self) -> i64 {
        0
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.surface_type.euler_characteristic()
    }

    /// The connected sum of ribbon doubles is again a ribbon double: types
    /// add, `k` adds, the cover group is the free product and the
    /// certificate follows by free-product additivity.
    pub fn connected_sum(parts: &[RibbonDouble]) -> Result<RibbonDouble, SurfaceError> {
        let (first, rest) = parts.split_first().ok_or(SurfaceError::EmptySum)?;
        if rest.is_empty() {
            return Ok(first.clone());
        }
        let surface_type = rest
            .iter()
            .fold(first.surface_type, |t, p| t.connected_sum(p.surface_type));
        let k = parts.iter().map(|p| p.k).sum();
        let cover = crate::fpgroup::free_product_all(parts.iter().map(|p| &p.cover_pi1));
        let cert = H2Certificate::free_product(parts.iter().map(|p| p.h2_cert.clone()).collect());
        let name = parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join(" # ");
        let mut out = RibbonDouble::new(name, surface_type, k, cover, cert)?;
        out.notes = parts.iter().flat_map(|p| p.notes.iter().cloned()).collect();
        Ok(out)
    }
}

/// Unknotted surface `U_{Σ,e}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknottedSurface {
    surface_type: SurfaceType,
    normal_euler: i64,
}

impl UnknottedSurface {
    /// Orientable unknots have `e = 0`; a non-orientable one with `c`
    /// crosscaps is a sum of `c` projective planes of normal Euler number
    /// `±2`, so `e ∈ {-2c, -2c+4, .., 2c}`.
    pub fn new(surface_type: SurfaceType, normal_euler: i64) -> Result<Self, SurfaceError> {
        let ok = match surface_type {
            SurfaceType::Orientable { .. } => normal_euler == 0,
            SurfaceType::NonOrientable { crosscaps } => {
                let c = crosscaps as i64;
                normal_euler.abs() <= 2 * c && (normal_euler - 2 * c).rem_euclid(4) == 0
            }
        };
        if !ok {
            return Err(SurfaceError::InvalidNormalEuler {
                surface: surface_type,
                e: normal_euler,
            });
        }
        Ok(UnknottedSurface {
            surface_type,
            normal_euler,
        })
    }

    pub fn rp2(normal_euler: i64) -> Result<Self, SurfaceError> {
        Self::new(SurfaceType::PROJECTIVE_PLANE, normal_euler)
    }

    pub fn surface_type(&self) -> SurfaceType {
        self.surface_type
    }

    pub fn normal_euler(&self) -> i64 {
        self.normal_euler
    }

    /// Number of `e = -2` and `e = +2` projective-plane summands.
    pub fn rp2_counts(&self) -> Option<(usize, usize)> {
        match self.surface_type {
            SurfaceType::Orientable { .. } => None,
            SurfaceType::NonOrientable { crosscaps } => {
                let c = crosscaps as i64;
                let minus = (2 * c - self.normal_euler) / 4;
                Some((minus as usize, (c - minus) as usize))
            }
        }
    }
}

/// Symbolic description of a knotted surface in the four-sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceSpec {
    DoubleOfRibbon(RibbonDouble),
    TwoKnot {
        name: String,
    },
    Unknotted(UnknottedSurface),
    /// Flattened, with at least one part.
    ConnectedSum(Vec<SurfaceSpec>),
}

impl SurfaceSpec {
    pub fn two_knot(name: impl Into<String>) -> Self {
        SurfaceSpec::TwoKnot { name: name.into() }
    }

    pub fn unknotted(surface_type: SurfaceType, normal_euler: i64) -> Result<Self, SurfaceError> {
        UnknottedSurface::new(surface_type, normal_euler).map(SurfaceSpec::Unknotted)
    }

    pub fn unknotted_rp2(normal_euler: i64) -> Result<Self, SurfaceError> {
        UnknottedSurface::rp2(normal_euler).map(SurfaceSpec::Unknotted)
    }

    /// Flattens nested sums. A single part is returned as is.
    pub fn connected_sum(parts: Vec<SurfaceSpec>) -> Result<Self, SurfaceError> {
        let mut flat = Vec::new();
        for p in parts {
            match p {
                SurfaceSpec::ConnectedSum(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => Err(SurfaceError::EmptySum),
            1 => Ok(flat.pop().expect("one part")),
            _ => Ok(SurfaceSpec::ConnectedSum(flat)),
        }
    }

    pub fn surface_type(&self) -> SurfaceType {
        match self {
            SurfaceSpec::DoubleOfRibbon(r) => r.surface_type,
            SurfaceSpec::TwoKnot { .. } => SurfaceType::SPHERE,
            SurfaceSpec::Unknotted(u) => u.surface_type,
            SurfaceSpec::ConnectedSum(parts) => parts
                .iter()
                .map(SurfaceSpec::surface_type)
                .reduce(SurfaceType::connected_sum)
                .unwrap_or(SurfaceType::SPHERE),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        match self {
            SurfaceSpec::ConnectedSum(parts) => {
                let sum: i64 = parts.iter().map(SurfaceSpec::euler_characteristic).sum();
                sum - 2 * (parts.len() as i64 - 1)
            }
            other => other.surface_type().euler_characteristic(),
        }
    }

    pub fn normal_euler(&self) -> i64 {
        match self {
            SurfaceSpec::DoubleOfRibbon(_) | SurfaceSpec::TwoKnot { .. } => 0,
            SurfaceSpec::Unknotted(u) => u.normal_euler,
            SurfaceSpec::ConnectedSum(parts) => parts.iter().map(SurfaceSpec::normal_euler).sum(),
        }
    }

    /// The ribbon double this surface is, if it is one or a sum of them.
    pub fn as_ribbon_double(&self) -> Option<RibbonDouble> {
        match self {
            SurfaceSpec::DoubleOfRibbon(r) => Some(r.clone()),
            SurfaceSpec::ConnectedSum(parts) => {
                let doubles: Option<Vec<RibbonDouble>> = parts.iter().map(SurfaceSpec::as_ribbon_double).collect();
                RibbonDouble::connected_sum(&doubles?).ok()
            }
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            SurfaceSpec::DoubleOfRibbon(r) => r.name.clone(),
            SurfaceSpec::TwoKnot { name } => name.clone(),
            SurfaceSpec::Unknotted(u) => format!("unknotted {} (e = {})", u.surface_type, u.normal_euler),
            SurfaceSpec::ConnectedSum(parts) => parts.iter().map(SurfaceSpec::label).collect::<Vec<_>>().join(" # "),
        }
    }
}
