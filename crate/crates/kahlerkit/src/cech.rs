//! Čech cohomology of a sheaf presented as finite vector-space data on the
//! nerve of a cover: per-intersection dimensions plus restriction matrices,
//! assembled into alternating-sign coboundary matrices.
//!
//! The cover itself is never seen. The tool consumes the nerve and the sheaf
//! data and trusts the user that the cover is good (all nonempty
//! intersections contractible); goodness is not decidable from this data.
//! For good covers the single-cover cohomology computed here already equals
//! the refinement limit.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::linalg::{smith_normal_form, ExactMatrix, IntMatrix};
use crate::scalar::GaussianRational;

/// The nerve of a finite cover: for each k, the list of (k+1)-element index
/// tuples whose intersection is nonempty. Tuples are strictly increasing and
/// the collection is downward closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nerve {
    /// simplices[k] — sorted list of (k+1)-tuples
    pub simplices: Vec<Vec<Vec<usize>>>,
}

impl Nerve {
    /// Build from an explicit list of tuples, validating strict monotonicity
    /// and downward closure.
    pub fn from_simplices(tuples: Vec<Vec<usize>>) -> Result<Nerve, String> {
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for t in &tuples {
            if t.is_empty() {
                return Err("empty tuple in nerve".into());
            }
            if !t.windows(2).all(|w| w[0] < w[1]) {
                return Err(format!("tuple {:?} is not strictly increasing", t));
            }
            set.insert(t.clone());
        }
        for t in &set {
            if t.len() > 1 {
                for j in 0..t.len() {
                    let mut face = t.clone();
                    face.remove(j);
                    if !set.contains(&face) {
                        return Err(format!("nerve not downward closed: {:?} missing", face));
                    }
                }
            }
        }
        let top = set.iter().map(|t| t.len()).max().unwrap_or(0);
        let mut simplices = vec![Vec::new(); top];
        for t in set {
            simplices[t.len() - 1].push(t);
        }
        Ok(Nerve { simplices })
    }

    /// Build from maximal faces, generating the downward closure.
    pub fn from_maximal(maximal: &[Vec<usize>]) -> Nerve {
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for face in maximal {
            let mut f = face.clone();
            f.sort_unstable();
            f.dedup();
            // all nonempty subsets
            let m = f.len();
            for mask in 1u32..(1 << m) {
                let sub: Vec<usize> = (0..m).filter(|&i| mask & (1 << i) != 0).map(|i| f[i]).collect();
                set.insert(sub);
            }
        }
        Nerve::from_simplices(set.into_iter().collect()).expect("closure is always valid")
    }

    /// Dimension of the nerve as a simplicial complex.
    pub fn dim(&self) -> usize {
        self.simplices.len().saturating_sub(1)
    }

    pub fn tuples(&self, k: usize) -> &[Vec<usize>] {
        self.simplices.get(k).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Barycentric subdivision: one vertex per simplex, one simplex per chain
    /// of proper inclusions. Used as a refinement sanity check — cohomology
    /// must be unchanged.
    pub fn barycentric_subdivision(&self) -> Nerve {
        let all: Vec<&Vec<usize>> = self.simplices.iter().flatten().collect();
        let index: BTreeMap<&Vec<usize>, usize> =
            all.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut chains: BTreeSet<Vec<usize>> = BTreeSet::new();
        fn extend(
            all: &[&Vec<usize>],
            index: &BTreeMap<&Vec<usize>, usize>,
            chain_ids: &mut Vec<usize>,
            last: &Vec<usize>,
            chains: &mut BTreeSet<Vec<usize>>,
        ) {
            let mut ids = chain_ids.clone();
            ids.sort_unstable();
            chains.insert(ids);
            for next in all {
                if next.len() > last.len() && last.iter().all(|v| next.contains(v)) {
                    chain_ids.push(index[*next]);
                    extend(all, index, chain_ids, next, chains);
                    chain_ids.pop();
                }
            }
        }
        for s in &all {
            let mut chain = vec![index[*s]];
            extend(&all, &index, &mut chain, s, &mut chains);
        }
        Nerve::from_simplices(chains.into_iter().collect()).expect("subdivision is closed")
    }
}

/// Vector-space sheaf data on a nerve: a dimension per tuple and a
/// restriction matrix per codimension-one face inclusion.
#[derive(Clone, Debug)]
pub struct SheafData {
    pub dims: BTreeMap<Vec<usize>, usize>,
    /// (face τ, cofacet σ) → matrix of r_{σ,τ} : F(U_τ) → F(U_σ)
    pub restrictions: BTreeMap<(Vec<usize>, Vec<usize>), ExactMatrix>,
}

impl SheafData {
    /// Constant sheaf of the given rank: every dimension equals `rank`, all
    /// restrictions are the identity.
    pub fn constant(nerve: &Nerve, rank: usize) -> SheafData {
        let mut dims = BTreeMap::new();
        let mut restrictions = BTreeMap::new();
        for level in &nerve.simplices {
            for t in level {
                dims.insert(t.clone(), rank);
                if t.len() > 1 {
                    for j in 0..t.len() {
                        let mut face = t.clone();
                        face.remove(j);
                        restrictions.insert((face, t.clone()), ExactMatrix::identity(rank));
                    }
                }
            }
        }
        SheafData { dims, restrictions }
    }
}

/// A Čech cochain complex with cached coboundary matrices.
///
/// δ∘δ = 0 and the two-step compatibility of the restriction maps are
/// verified at construction.
pub struct CechComplex {
    pub nerve: Nerve,
    pub sheaf: SheafData,
    coboundaries: Vec<ExactMatrix>,
}

impl CechComplex {
    pub fn new(nerve: Nerve, sheaf: SheafData) -> Result<CechComplex, String> {
        // every tuple needs a dimension; every codim-1 inclusion a matrix
        for level in &nerve.simplices {
            for t in level {
                let dim = *sheaf
                    .dims
                    .get(t)
                    .ok_or_else(|| format!("missing dimension for {:?}", t))?;
                if t.len() > 1 {
                    for j in 0..t.len() {
                        let mut face = t.clone();
                        face.remove(j);
                        let m = sheaf
                            .restrictions
                            .get(&(face.clone(), t.clone()))
                            .ok_or_else(|| format!("missing restriction {:?} → {:?}", face, t))?;
                        if m.rows != dim || m.cols != sheaf.dims[&face] {
                            return Err(format!(
                                "restriction {:?} → {:?} has shape {}×{}, expected {}×{}",
                                face, t, m.rows, m.cols, dim, sheaf.dims[&face]
                            ));
                        }
                    }
                }
            }
        }
        // two-step compatibility: both codim-1 paths ρ → τ → σ agree
        for k in 0..nerve.dim().saturating_add(1) {
            for sigma in nerve.tuples(k) {
                if sigma.len() < 3 {
                    continue;
                }
                for a in 0..sigma.len() {
                    for b in a + 1..sigma.len() {
                        let mut rho = sigma.clone();
                        rho.remove(b);
                        rho.remove(a);
                        let mut tau1 = sigma.clone();
                        tau1.remove(a); // drop a first
                        let mut tau2 = sigma.clone();
                        tau2.remove(b);
                        let p1 = sheaf.restrictions[&(tau1.clone(), sigma.clone())]
                            .mul(&sheaf.restrictions[&(rho.clone(), tau1.clone())]);
                        let p2 = sheaf.restrictions[&(tau2.clone(), sigma.clone())]
                            .mul(&sheaf.restrictions[&(rho.clone(), tau2.clone())]);
                        if p1 != p2 {
                            return Err(format!(
                                "restrictions do not compose consistently on {:?} ⊂ {:?}",
                                rho, sigma
                            ));
                        }
                    }
                }
            }
        }

        let mut coboundaries = Vec::new();
        let top = nerve.dim();
        for k in 0..=top {
            coboundaries.push(assemble_coboundary(&nerve, &sheaf, k));
        }
        // δ^{k+1} ∘ δ^k = 0
        for k in 0..top {
            let comp = coboundaries[k + 1].mul(&coboundaries[k]);
            if comp != ExactMatrix::zeros(comp.rows, comp.cols) {
                return Err(format!("δ∘δ ≠ 0 between degrees {} and {}", k, k + 1));
            }
        }
        Ok(CechComplex {
            nerve,
            sheaf,
            coboundaries,
        })
    }

    /// Total dimension of the k-cochain space Č^k.
    pub fn cochain_dim(&self, k: usize) -> usize {
        self.nerve
            .tuples(k)
            .iter()
            .map(|t| self.sheaf.dims[t])
            .sum()
    }

    /// The coboundary matrix δ^k : Č^k → Č^{k+1} (zero map past the top
    /// dimension).
    pub fn coboundary(&self, k: usize) -> ExactMatrix {
        match self.coboundaries.get(k) {
            Some(m) => m.clone(),
            None => ExactMatrix::zeros(0, self.cochain_dim(k)),
        }
    }

    /// dim Ȟ^k = dim ker δ^k − rank δ^{k−1}, for k = 0..=dim(nerve).
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let top = self.nerve.dim();
        let mut out = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let delta_k = self.coboundary(k);
            let ker = self.cochain_dim(k) - delta_k.rank();
            let im_prev = if k == 0 {
                0
            } else {
                self.coboundary(k - 1).rank()
            };
            out.push(ker - im_prev);
        }
        out
    }
}

/// Cochain ordering is lexicographic on the strictly increasing tuples; the
/// block for tuple σ spans `dims[σ]` consecutive coordinates.
fn assemble_coboundary(nerve: &Nerve, sheaf: &SheafData, k: usize) -> ExactMatrix {
    let domain = nerve.tuples(k);
    let codomain = nerve.tuples(k + 1);
    let col_offsets = offsets(domain, sheaf);
    let row_offsets = offsets(codomain, sheaf);
    let rows = codomain.iter().map(|t| sheaf.dims[t]).sum();
    let cols = domain.iter().map(|t| sheaf.dims[t]).sum();
    let dom_index: BTreeMap<&Vec<usize>, usize> =
        domain.iter().enumerate().map(|(i, t)| (t, i)).collect();

    let mut m = ExactMatrix::zeros(rows, cols);
    for (si, sigma) in codomain.iter().enumerate() {
        for j in 0..sigma.len() {
            let mut face = sigma.clone();
            face.remove(j);
            let fi = dom_index[&face];
            let r = &sheaf.restrictions[&(face.clone(), sigma.clone())];
            let sign = if j % 2 == 0 { 1 } else { -1 };
            for a in 0..r.rows {
                for b in 0..r.cols {
                    let mut v = r[(a, b)].clone();
                    if sign < 0 {
                        v = -v;
                    }
                    m[(row_offsets[si] + a, col_offsets[fi] + b)] = v;
                }
            }
        }
    }
    m
}

fn offsets(tuples: &[Vec<usize>], sheaf: &SheafData) -> Vec<usize> {
    let mut out = Vec::with_capacity(tuples.len());
    let mut acc = 0;
    for t in tuples {
        out.push(acc);
        acc += sheaf.dims[t];
    }
    out
}

/// The Čech complex of the constant sheaf of the given rank on a nerve; its
/// cochain complex is the simplicial cochain complex tensored with the rank.
pub fn constant_sheaf_complex(nerve: &Nerve, rank: usize) -> CechComplex {
    let sheaf = SheafData::constant(nerve, rank);
    CechComplex::new(nerve.clone(), sheaf).expect("constant sheaf data is always consistent")
}

/// Integer simplicial coboundary δ^k of a nerve (constant sheaf Z, entries ±1).
pub fn integer_coboundary(nerve: &Nerve, k: usize) -> IntMatrix {
    let domain = nerve.tuples(k);
    let codomain = nerve.tuples(k + 1);
    let dom_index: BTreeMap<&Vec<usize>, usize> =
        domain.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut m = IntMatrix::zeros(codomain.len(), domain.len());
    for (si, sigma) in codomain.iter().enumerate() {
        for j in 0..sigma.len() {
            let mut face = sigma.clone();
            face.remove(j);
            let v = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            m[(si, dom_index[&face])] = v;
        }
    }
    m
}

/// A finitely generated abelian group Z^free ⊕ ⊕ᵢ Z/dᵢ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{}", d));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// Ȟ^k(nerve, Z) for every k, free rank plus torsion invariant factors,
/// computed from Smith normal forms of the integer coboundaries.
pub fn integer_cohomology(nerve: &Nerve) -> Vec<AbelianGroup> {
    let top = nerve.dim();
    let mut out = Vec::with_capacity(top + 1);
    let snfs: Vec<_> = (0..=top)
        .map(|k| smith_normal_form(&integer_coboundary(nerve, k)))
        .collect();
    for k in 0..=top {
        let dim_k = nerve.tuples(k).len();
        let rank_k = snfs[k].rank();
        let rank_prev = if k == 0 { 0 } else { snfs[k - 1].rank() };
        let torsion: Vec<BigInt> = if k == 0 {
            Vec::new()
        } else {
            snfs[k - 1]
                .invariant_factors()
                .into_iter()
                .filter(|d| d > &BigInt::one())
                .collect()
        };
        out.push(AbelianGroup {
            free_rank: dim_k - rank_k - rank_prev,
            torsion,
        });
    }
    out
}

// ---------------------------------------------------------------------------
// Structured input (the CLI file format)

/// JSON-facing description of a Čech problem. Either `constant` is given (the
/// nerve alone determines the complex) or `dims` + `restrictions` spell out
/// the sheaf data with integer matrices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CechInput {
    pub nerve: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dims: Vec<DimEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub restrictions: Vec<RestrictionEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DimEntry {
    pub simplex: Vec<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RestrictionEntry {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
}

impl CechInput {
    pub fn build(&self) -> Result<CechComplex, String> {
        let nerve = Nerve::from_simplices(self.nerve.clone())?;
        if let Some(rank) = self.constant {
            return Ok(constant_sheaf_complex(&nerve, rank));
        }
        let mut dims = BTreeMap::new();
        for e in &self.dims {
            dims.insert(e.simplex.clone(), e.dim);
        }
        let mut restrictions = BTreeMap::new();
        for e in &self.restrictions {
            let rows: Vec<Vec<GaussianRational>> = e
                .matrix
                .iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from_int(x)).collect())
                .collect();
            restrictions.insert(
                (e.from.clone(), e.to.clone()),
                ExactMatrix::from_rows(rows),
            );
        }
        CechComplex::new(nerve, SheafData { dims, restrictions })
    }
}

// ---------------------------------------------------------------------------
// Standard nerves used as fixtures and CLI demos

/// Boundary of a triangle: a good 3-arc cover of the circle.
pub fn circle_nerve() -> Nerve {
    Nerve::from_maximal(&[vec![0, 1], vec![1, 2], vec![0, 2]])
}

/// The full n-simplex on vertices 0..=n (nerve of a cover of a contractible
/// space).
pub fn simplex_nerve(n: usize) -> Nerve {
    Nerve::from_maximal(&[(0..=n).collect()])
}

/// The 7-vertex (Möbius–Császár) triangulation of the 2-torus: faces
/// {i, i+1, i+3} and {i, i+2, i+3} mod 7.
pub fn torus_nerve() -> Nerve {
    let mut faces = Vec::new();
    for i in 0..7usize {
        faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        faces.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    Nerve::from_maximal(&faces)
}

/// The 6-vertex minimal triangulation of RP² (antipodal quotient of the
/// icosahedron).
pub fn rp2_nerve() -> Nerve {
    let faces: [[usize; 3]; 10] = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [2, 4, 5],
        [2, 3, 5],
        [1, 3, 5],
        [1, 3, 4],
    ];
    Nerve::from_maximal(&faces.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
}
