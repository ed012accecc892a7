//! Components of the fibres of the potential over `0` and `infinity`, the
//! resulting generators of the singularity category and the pairing with
//! vanishing cycles.

use serde::Serialize;

use super::model::MirrorModel;
use super::{Component, MirrorError};
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Fibre {
    Zero,
    Infinity,
}

#[derive(Debug, Clone, Serialize)]
pub struct FibreReport {
    pub fibre: Fibre,
    pub components: Vec<Component>,
    /// Component labels grouped by the `z_i <-> w_i` involution.
    pub symmetry_classes: Vec<Vec<String>>,
    pub objects: Vec<String>,
    /// The product of the component generators equals the fibre equation.
    pub product_verified: bool,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, a: usize) -> usize {
        let mut r = a;
        while self.0[r] != r {
            r = self.0[r];
        }
        self.0[a] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn classes(model: &MirrorModel, gens: &[Polynomial]) -> Result<Vec<Vec<usize>>, MirrorError> {
    let mut uf = UnionFind::new(gens.len());
    for (a, g) in gens.iter().enumerate() {
        let image = model.swap(g)?.monic();
        for (b, h) in gens.iter().enumerate() {
            if image == h.monic() {
                uf.union(a, b);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut root_of = Vec::new();
    for a in 0..gens.len() {
        let r = uf.find(a);
        match root_of.iter().position(|&x| x == r) {
            Some(k) => out[k].push(a),
            None => {
                root_of.push(r);
                out.push(vec![a]);
            }
        }
    }
    Ok(out)
}

/// Zero fibre: `D_w = (y1 + t1*prod w)`, `D_z = (y1 + t2*prod z)`, one
/// object `F(z0)`. Infinity fibre: `(y1)`, `(z_i)`, `(w_i)`, one object per
/// symmetry class, with `F(z_n)` supported on `y1 = 0`.
pub fn fibre_report(model: &MirrorModel, which: Fibre) -> Result<FibreReport, MirrorError> {
    let r = model.ring();
    let n = model.n();
    let (labels, gens, equation): (Vec<String>, Vec<Polynomial>, Polynomial) = match which {
        Fibre::Zero => {
            let (fw, fz) = model.factors();
            (
                vec!["D_w".into(), "D_z".into()],
                vec![fw, fz],
                model.potential_num().clone(),
            )
        }
        Fibre::Infinity => {
            let mut labels = vec!["y1".to_string()];
            labels.extend(model.z_names());
            labels.extend(model.w_names());
            let gens = labels
                .iter()
                .map(|v| r.var(v))
                .collect::<Result<Vec<_>, _>>()?;
            let x1 = r.var("x1")?;
            let eq = model
                .potential_den()
                .div_exact(&x1)
                .ok_or(MirrorError::NoRelation)?;
            (labels, gens, eq)
        }
    };
    let product = gens.iter().fold(r.one(), |acc, g| &acc * g);
    let product_verified = product.monic() == equation.monic();
    let groups = classes(model, &gens)?;
    let components = labels
        .iter()
        .zip(&gens)
        .map(|(l, g)| Component {
            label: l.clone(),
            generators: vec![g.to_string()],
        })
        .collect();
    let symmetry_classes: Vec<Vec<String>> = groups
        .iter()
        .map(|c| c.iter().map(|&a| labels[a].clone()).collect())
        .collect();
    let objects = match which {
        Fibre::Zero => vec!["F(z0)".to_string()],
        Fibre::Infinity => {
            let mut objs = Vec::new();
            for class in &symmetry_classes {
                let label = &class[0];
                if label == "y1" {
                    objs.push((n, format!("F(z{n})")));
                } else {
                    let i: usize = label[1..].parse().expect("indexed label");
                    objs.push((i, format!("F(z{i})")));
                }
            }
            objs.sort();
            objs.into_iter().map(|(_, s)| s).collect()
        }
    };
    Ok(FibreReport {
        fibre: which,
        components,
        symmetry_classes,
        objects,
        product_verified,
    })
}

/// `F(z0), ..., F(zn)`: the zero fibre's object followed by the infinity
/// fibre's.
pub fn dsg_generators(model: &MirrorModel) -> Result<Vec<String>, MirrorError> {
    let mut out = fibre_report(model, Fibre::Zero)?.objects;
    out.extend(fibre_report(model, Fibre::Infinity)?.objects);
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct MirrorMapReport {
    pub pairs: Vec<(String, String)>,
    pub middle_homology_rank: usize,
    pub bijective: bool,
}

/// `L_i <-> F(z_i)` for `i = 1..n` and `L_{n+1} <-> F(z0)`.
pub fn mirror_map(model: &MirrorModel) -> Result<MirrorMapReport, MirrorError> {
    let n = model.n();
    let gens = dsg_generators(model)?;
    let mut pairs: Vec<(String, String)> = (1..=n)
        .map(|i| (format!("L{i}"), format!("F(z{i})")))
        .collect();
    pairs.push((format!("L{}", n + 1), "F(z0)".into()));
    let mut left: Vec<&String> = pairs.iter().map(|p| &p.0).collect();
    let mut right: Vec<&String> = pairs.iter().map(|p| &p.1).collect();
    left.sort();
    left.dedup();
    right.sort();
    right.dedup();
    let mut sorted_gens: Vec<&String> = gens.iter().collect();
    sorted_gens.sort();
    let bijective = left.len() == n + 1 && right.len() == n + 1 && right == sorted_gens;
    Ok(MirrorMapReport {
        pairs,
        middle_homology_rank: n,
        bijective,
    })
}
