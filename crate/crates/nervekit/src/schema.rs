//! Self-describing JSON interchange for categories, monoidal structures,
//! functors, and diagrams, with bit-exact round-tripping (load → save → load
//! yields identical structures).
//!
//! Every input file carries a `kind` tag. Object and morphism ids must be
//! dense (`0..count`); maps are keyed by decimal strings. The composition
//! table lists `[g, f, g∘f]` triples and must contain every composable pair
//! exactly once — omissions surface as structural validation errors, not
//! parse errors.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::fincat::FiniteCategory;
use crate::monoidal::{
    BraidedDiagram, BraidedMonoidalCategory, MonoidalCategory, MonoidalDiagram, MonoidalFunctor,
};

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Schema(String),
}

fn schema(msg: impl Into<String>) -> ParseError {
    ParseError::Schema(msg.into())
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MorphismEntry {
    pub id: usize,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CategoryFile {
    pub objects: Vec<usize>,
    pub morphisms: Vec<MorphismEntry>,
    pub identity: BTreeMap<String, usize>,
    pub compose: Vec<[usize; 3]>,
}

impl CategoryFile {
    pub fn from_category(c: &FiniteCategory) -> Self {
        CategoryFile {
            objects: (0..c.object_count).collect(),
            morphisms: (0..c.mor_count())
                .map(|m| MorphismEntry {
                    id: m,
                    src: c.src[m],
                    tgt: c.tgt[m],
                })
                .collect(),
            identity: c
                .identity
                .iter()
                .enumerate()
                .map(|(x, &m)| (x.to_string(), m))
                .collect(),
            compose: c.compose_entries().iter().map(|&(g, f, gf)| [g, f, gf]).collect(),
        }
    }

    pub fn to_category(&self) -> Result<FiniteCategory, ParseError> {
        let n_obj = self.objects.len();
        let mut seen = vec![false; n_obj];
        for &o in &self.objects {
            if o >= n_obj || seen[o] {
                return Err(schema(format!("object ids must be dense, got {o}")));
            }
            seen[o] = true;
        }
        let n_mor = self.morphisms.len();
        let mut src = vec![0usize; n_mor];
        let mut tgt = vec![0usize; n_mor];
        let mut seen = vec![false; n_mor];
        for m in &self.morphisms {
            if m.id >= n_mor || seen[m.id] {
                return Err(schema(format!("morphism ids must be dense, got {}", m.id)));
            }
            seen[m.id] = true;
            src[m.id] = m.src;
            tgt[m.id] = m.tgt;
        }
        let mut identity = vec![0usize; n_obj];
        if self.identity.len() != n_obj {
            return Err(schema("identity map must cover every object"));
        }
        for (k, &m) in &self.identity {
            let x: usize = k
                .parse()
                .map_err(|_| schema(format!("identity key {k} is not an object id")))?;
            if x >= n_obj {
                return Err(schema(format!("identity key {x} out of range")));
            }
            identity[x] = m;
        }
        let mut entries = Vec::with_capacity(self.compose.len());
        let mut seen = std::collections::HashSet::new();
        for &[g, f, gf] in &self.compose {
            if g >= n_mor || f >= n_mor {
                return Err(schema(format!("compose entry ({g},{f}) out of range")));
            }
            if !seen.insert((g, f)) {
                return Err(schema(format!("duplicate compose entry ({g},{f})")));
            }
            entries.push((g, f, gf));
        }
        Ok(FiniteCategory::new(n_obj, src, tgt, identity, &entries))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MonoidalFile {
    #[serde(flatten)]
    pub category: CategoryFile,
    pub tensor_obj: Vec<Vec<usize>>,
    pub tensor_mor: Vec<Vec<usize>>,
    pub unit: usize,
    pub assoc: Vec<Vec<Vec<usize>>>,
    pub lunit: Vec<usize>,
    pub runit: Vec<usize>,
}

impl MonoidalFile {
    pub fn from_monoidal(m: &MonoidalCategory) -> Self {
        let n = m.objects();
        MonoidalFile {
            category: CategoryFile::from_category(&m.cat),
            tensor_obj: m.tensor_obj.clone(),
            tensor_mor: m.tensor_mor.clone(),
            unit: m.unit,
            assoc: (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| (0..n).map(|z| m.assoc_at(x, y, z)).collect())
                        .collect()
                })
                .collect(),
            lunit: m.lunit.clone(),
            runit: m.runit.clone(),
        }
    }

    pub fn to_monoidal(&self) -> Result<MonoidalCategory, ParseError> {
        let cat = self.category.to_category()?;
        let n = cat.object_count;
        if self.assoc.len() != n
            || self.assoc.iter().any(|p| p.len() != n || p.iter().any(|r| r.len() != n))
        {
            return Err(schema("assoc table must be an n×n×n array"));
        }
        let mut assoc = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    assoc.push(self.assoc[x][y][z]);
                }
            }
        }
        Ok(MonoidalCategory {
            cat,
            tensor_obj: self.tensor_obj.clone(),
            tensor_mor: self.tensor_mor.clone(),
            unit: self.unit,
            assoc,
            lunit: self.lunit.clone(),
            runit: self.runit.clone(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BraidedFile {
    #[serde(flatten)]
    pub monoidal: MonoidalFile,
    pub braiding: Vec<Vec<usize>>,
}

impl BraidedFile {
    pub fn from_braided(b: &BraidedMonoidalCategory) -> Self {
        BraidedFile {
            monoidal: MonoidalFile::from_monoidal(&b.mon),
            braiding: b.braiding.clone(),
        }
    }

    pub fn to_braided(&self) -> Result<BraidedMonoidalCategory, ParseError> {
        Ok(BraidedMonoidalCategory {
            mon: self.monoidal.to_monoidal()?,
            braiding: self.braiding.clone(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FunctorBlock {
    pub obj_map: Vec<usize>,
    pub mor_map: Vec<usize>,
    pub tensor_constraint: Vec<Vec<usize>>,
    pub unit_constraint: usize,
}

impl FunctorBlock {
    pub fn from_functor(f: &MonoidalFunctor) -> Self {
        FunctorBlock {
            obj_map: f.functor.obj_map.clone(),
            mor_map: f.functor.mor_map.clone(),
            tensor_constraint: f.tensor_constraint.clone(),
            unit_constraint: f.unit_constraint,
        }
    }

    pub fn to_functor(&self) -> MonoidalFunctor {
        MonoidalFunctor {
            functor: crate::fincat::Functor {
                obj_map: self.obj_map.clone(),
                mor_map: self.mor_map.clone(),
            },
            tensor_constraint: self.tensor_constraint.clone(),
            unit_constraint: self.unit_constraint,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FunctorFile<C> {
    pub source: C,
    pub target: C,
    #[serde(flatten)]
    pub functor: FunctorBlock,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DiagramFile<C> {
    pub index: CategoryFile,
    /// Fiber per index object, keyed by decimal object id.
    pub fibers: BTreeMap<String, C>,
    /// Transfer functor per index morphism, keyed by decimal morphism id.
    pub transfer: BTreeMap<String, FunctorBlock>,
}

fn dense_map<C: Clone>(
    map: &BTreeMap<String, C>,
    count: usize,
    what: &str,
) -> Result<Vec<C>, ParseError> {
    let mut out: Vec<Option<C>> = vec![None; count];
    for (k, v) in map {
        let i: usize = k.parse().map_err(|_| schema(format!("{what} key {k} not numeric")))?;
        if i >= count {
            return Err(schema(format!("{what} key {i} out of range")));
        }
        out[i] = Some(v.clone());
    }
    out.into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| schema(format!("{what} missing entry {i}"))))
        .collect()
}

impl DiagramFile<BraidedFile> {
    pub fn from_braided_diagram(d: &BraidedDiagram) -> Self {
        DiagramFile {
            index: CategoryFile::from_category(&d.index),
            fibers: d
                .fibers
                .iter()
                .enumerate()
                .map(|(i, b)| (i.to_string(), BraidedFile::from_braided(b)))
                .collect(),
            transfer: d
                .transfers
                .iter()
                .enumerate()
                .map(|(m, f)| (m.to_string(), FunctorBlock::from_functor(f)))
                .collect(),
        }
    }

    pub fn to_braided_diagram(&self) -> Result<BraidedDiagram, ParseError> {
        let index = self.index.to_category()?;
        let fibers = dense_map(&self.fibers, index.object_count, "fibers")?
            .into_iter()
            .map(|f| f.to_braided().map(Arc::new))
            .collect::<Result<Vec<_>, _>>()?;
        let transfers = dense_map(&self.transfer, index.mor_count(), "transfer")?
            .into_iter()
            .map(|f| Arc::new(f.to_functor()))
            .collect();
        Ok(BraidedDiagram {
            index,
            fibers,
            transfers,
        })
    }
}

impl DiagramFile<MonoidalFile> {
    pub fn from_monoidal_diagram(d: &MonoidalDiagram) -> Self {
        DiagramFile {
            index: CategoryFile::from_category(&d.index),
            fibers: d
                .fibers
                .iter()
                .enumerate()
                .map(|(i, m)| (i.to_string(), MonoidalFile::from_monoidal(m)))
                .collect(),
            transfer: d
                .transfers
                .iter()
                .enumerate()
                .map(|(m, f)| (m.to_string(), FunctorBlock::from_functor(f)))
                .collect(),
        }
    }

    pub fn to_monoidal_diagram(&self) -> Result<MonoidalDiagram, ParseError> {
        let index = self.index.to_category()?;
        let fibers = dense_map(&self.fibers, index.object_count, "fibers")?
            .into_iter()
            .map(|f| f.to_monoidal().map(Arc::new))
            .collect::<Result<Vec<_>, _>>()?;
        let transfers = dense_map(&self.transfer, index.mor_count(), "transfer")?
            .into_iter()
            .map(|f| Arc::new(f.to_functor()))
            .collect();
        Ok(MonoidalDiagram {
            index,
            fibers,
            transfers,
        })
    }
}

/// Any input file, dispatched on the `kind` tag.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputFile {
    Category(CategoryFile),
    Monoidal(MonoidalFile),
    Braided(BraidedFile),
    MonoidalFunctor(FunctorFile<MonoidalFile>),
    BraidedFunctor(FunctorFile<BraidedFile>),
    MonoidalDiagram(DiagramFile<MonoidalFile>),
    BraidedDiagram(DiagramFile<BraidedFile>),
}

impl InputFile {
    pub fn parse(text: &str) -> Result<InputFile, ParseError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{corpus_braided_diagrams, disc_cyclic, one_object_z2, pointed_z2};

    #[test]
    fn categories_round_trip() {
        for b in [disc_cyclic(4), one_object_z2(), pointed_z2()] {
            let file = BraidedFile::from_braided(&b);
            let json = serde_json::to_string_pretty(&file).unwrap();
            let back: BraidedFile = serde_json::from_str(&json).unwrap();
            assert_eq!(back, file);
            assert_eq!(back.to_braided().unwrap(), b);
        }
    }

    #[test]
    fn diagrams_round_trip_through_input_file() {
        for (name, d) in corpus_braided_diagrams() {
            let input = InputFile::BraidedDiagram(DiagramFile::from_braided_diagram(&d));
            let json = input.to_json();
            let back = InputFile::parse(&json).unwrap();
            assert_eq!(back, input, "{name}");
            // and once more: save(load(x)) == save(x) byte for byte
            assert_eq!(back.to_json(), json, "{name}");
            match back {
                InputFile::BraidedDiagram(df) => {
                    let d2 = df.to_braided_diagram().unwrap();
                    assert_eq!(d2.index, d.index);
                    assert_eq!(d2.fibers.len(), d.fibers.len());
                    for (a, b) in d2.fibers.iter().zip(&d.fibers) {
                        assert_eq!(**a, **b);
                    }
                    for (a, b) in d2.transfers.iter().zip(&d.transfers) {
                        assert_eq!(**a, **b);
                    }
                }
                _ => panic!("kind changed"),
            }
        }
    }

    #[test]
    fn non_dense_ids_rejected() {
        let mut file = CategoryFile::from_category(&crate::fincat::ordinal(1));
        file.morphisms[0].id = 7;
        let err = file.to_category().unwrap_err();
        assert!(matches!(err, ParseError::Schema(_)));
    }

    #[test]
    fn duplicate_compose_entries_rejected() {
        let mut file = CategoryFile::from_category(&crate::fincat::ordinal(1));
        let first = file.compose[0];
        file.compose.push(first);
        assert!(file.to_category().is_err());
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(
            InputFile::parse("{ not json"),
            Err(ParseError::Json(_))
        ));
    }
}
