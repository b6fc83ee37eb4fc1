//! Diagrams of lifted edges, goals between parallel paths, and verdicts.

use std::collections::BTreeMap;
use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free::{Content, Flavor, FreeMor};
use crate::functor::{Evaluator, LetterInterp, SharedFunctor};
use crate::garside::positive_word;
use crate::perm::Permutation;
use crate::ualg::{UAlg, UMor, UObj};

#[derive(Clone, Debug)]
pub struct Edge {
    pub name: String,
    pub source: String,
    pub target: String,
    pub mor: UMor,
}

/// Edge names as written, right to left: `["e3", "e2", "e1"]` runs `e1`
/// first. An empty path needs its node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub edges: Vec<String>,
    pub at: Option<String>,
}

impl Path {
    pub fn of<S: AsRef<str>>(edges: &[S]) -> Path {
        Path {
            edges: edges.iter().map(|e| e.as_ref().to_string()).collect(),
            at: None,
        }
    }

    pub fn empty_at(node: &str) -> Path {
        Path {
            edges: Vec::new(),
            at: Some(node.to_string()),
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.at, self.edges.is_empty()) {
            (Some(n), true) => write!(f, "id({n})"),
            _ => f.write_str(&self.edges.join(" . ")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Goal {
    pub name: String,
    pub lhs: Path,
    pub rhs: Path,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equal,
    /// Braids differ, underlying permutations agree.
    EqualInSOnly,
    NotEqual,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equal => "EQUAL",
            Verdict::EqualInSOnly => "EQUAL_IN_S_ONLY",
            Verdict::NotEqual => "NOT_EQUAL",
        })
    }
}

/// A functor and letter reading used to evaluate lifts concretely.
#[derive(Clone, Debug)]
pub struct LiftContext {
    pub functor: SharedFunctor,
    pub interp: LetterInterp,
}

#[derive(Clone, Debug)]
pub struct Diagram {
    alg: UAlg,
    nodes: IndexMap<String, UObj>,
    edges: IndexMap<String, Edge>,
    goals: Vec<Goal>,
    lift: Option<LiftContext>,
}

impl Diagram {
    pub fn new(alg: UAlg) -> Diagram {
        Diagram {
            alg,
            nodes: IndexMap::new(),
            edges: IndexMap::new(),
            goals: Vec::new(),
            lift: None,
        }
    }

    pub fn alg(&self) -> &UAlg {
        &self.alg
    }

    pub fn flavor(&self) -> Flavor {
        self.alg.flavor()
    }

    pub fn nodes(&self) -> &IndexMap<String, UObj> {
        &self.nodes
    }

    pub fn edges(&self) -> &IndexMap<String, Edge> {
        &self.edges
    }

    pub fn goals(&self) -> &[Goal] {
        &self.goals
    }

    pub fn lift(&self) -> Option<&LiftContext> {
        self.lift.as_ref()
    }

    pub fn goal(&self, name: &str) -> Result<&Goal> {
        self.goals
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn add_node(&mut self, name: &str, obj: UObj) -> Result<()> {
        if self.nodes.contains_key(name) {
            return Err(Error::InvalidName(format!("node `{name}` declared twice")));
        }
        self.nodes.insert(name.to_string(), obj);
        Ok(())
    }

    pub fn node(&self, name: &str) -> Result<&UObj> {
        self.nodes
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn add_edge(&mut self, name: &str, source: &str, target: &str, mor: UMor) -> Result<()> {
        if self.edges.contains_key(name) {
            return Err(Error::InvalidName(format!("edge `{name}` declared twice")));
        }
        let (s, t) = (self.node(source)?, self.node(target)?);
        if mor.source() != s {
            return Err(Error::Composition(format!(
                "edge `{name}` starts at {} but node `{source}` is {s}",
                mor.source()
            )));
        }
        if mor.target() != t {
            return Err(Error::Composition(format!(
                "edge `{name}` ends at {} but node `{target}` is {t}",
                mor.target()
            )));
        }
        self.edges.insert(
            name.to_string(),
            Edge {
                name: name.to_string(),
                source: source.to_string(),
                target: target.to_string(),
                mor,
            },
        );
        Ok(())
    }

    pub fn edge(&self, name: &str) -> Result<&Edge> {
        self.edges
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn add_goal(&mut self, goal: Goal) -> Result<()> {
        if self.goals.iter().any(|g| g.name == goal.name) {
            return Err(Error::InvalidName(format!("goal `{}` declared twice", goal.name)));
        }
        let l = self.endpoints(&goal.lhs)?;
        let r = self.endpoints(&goal.rhs)?;
        if l != r {
            return Err(Error::Path(format!(
                "goal `{}`: left runs {} → {}, right runs {} → {}",
                goal.name, l.0, l.1, r.0, r.1
            )));
        }
        self.goals.push(goal);
        Ok(())
    }

    pub fn set_lift(&mut self, functor: SharedFunctor, interp: LetterInterp) -> Result<()> {
        Evaluator::new(&self.alg, functor.as_ref(), &interp)?;
        self.lift = Some(LiftContext { functor, interp });
        Ok(())
    }

    /// `(start, end)` node names of a path.
    pub fn endpoints(&self, path: &Path) -> Result<(String, String)> {
        if path.edges.is_empty() {
            let at = path
                .at
                .as_ref()
                .ok_or_else(|| Error::Path("an empty path needs a node".into()))?;
            self.node(at)?;
            return Ok((at.clone(), at.clone()));
        }
        let mut edges = path.edges.iter().rev();
        let first = self.edge(edges.next().expect("nonempty"))?;
        let mut prev = first;
        for name in edges {
            let e = self.edge(name)?;
            if e.source != prev.target {
                return Err(Error::Path(format!(
                    "broken chain at {} → {}: `{}` ends at `{}` but `{}` starts at `{}`",
                    prev.name, e.name, prev.name, prev.target, e.name, e.source
                )));
            }
            prev = e;
        }
        let (start, end) = (first.source.clone(), prev.target.clone());
        if let Some(at) = &path.at {
            if *at != start {
                return Err(Error::Path(format!("path starts at `{start}`, not `{at}`")));
            }
        }
        Ok((start, end))
    }

    pub fn compose_path(&self, path: &Path) -> Result<UMor> {
        let (start, _) = self.endpoints(path)?;
        let mut acc: Option<UMor> = None;
        for name in path.edges.iter().rev() {
            let e = &self.edge(name)?.mor;
            acc = Some(match acc {
                None => e.clone(),
                Some(prev) => e.compose(&prev)?,
            });
        }
        match acc {
            Some(m) => Ok(m),
            None => Ok(self.alg.id(self.node(&start)?)),
        }
    }

    pub fn check_goal(&self, goal: &Goal) -> Result<GoalReport> {
        let left = self.alg.dissolve(&self.compose_path(&goal.lhs)?)?;
        let right = self.alg.dissolve(&self.compose_path(&goal.rhs)?)?;
        let verdict = if left.equals(&right)? {
            Verdict::Equal
        } else if self.flavor() == Flavor::Braided && left.permutation() == right.permutation() {
            Verdict::EqualInSOnly
        } else {
            Verdict::NotEqual
        };
        Ok(GoalReport {
            goal: goal.name.clone(),
            verdict,
            left,
            right,
        })
    }

    /// Check every goal, in declaration order, on worker threads.
    pub fn check_all(&self) -> Vec<Result<GoalReport>> {
        std::thread::scope(|scope| {
            let handles: Vec<_> = self
                .goals
                .iter()
                .map(|g| scope.spawn(move || self.check_goal(g)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("goal checking does not panic"))
                .collect()
        })
    }

    pub fn explain_goal(&self, goal: &Goal) -> Result<Explanation> {
        let report = self.check_goal(goal)?;
        let gens: Vec<String> = self
            .alg
            .phi()
            .target()
            .names()
            .iter()
            .filter(|g| report.left.source().count(g) > 0)
            .cloned()
            .collect();
        let projections = gens
            .into_iter()
            .map(|g| {
                let l = report.left.self_permutation(&g);
                let r = report.right.self_permutation(&g);
                (g, (l, r))
            })
            .collect();
        let lambda = match &self.lift {
            Some(ctx) => {
                let ev = Evaluator::new(&self.alg, ctx.functor.as_ref(), &ctx.interp)?;
                let l = ev.mor(&self.compose_path(&goal.lhs)?)?;
                let r = ev.mor(&self.compose_path(&goal.rhs)?)?;
                let equal = l.equals(&r)?;
                Some(LambdaImages {
                    functor: ctx.functor.name(),
                    left: l,
                    right: r,
                    equal,
                })
            }
            None => None,
        };
        Ok(Explanation {
            left: Side::of(&report.left),
            right: Side::of(&report.right),
            goal: report.goal,
            verdict: report.verdict,
            flavor: self.flavor(),
            projections,
            lambda,
        })
    }

    /// Goals for every pair of distinct simple paths with common endpoints.
    pub fn all_parallel_pairs(&self) -> Result<Vec<Goal>> {
        const LIMIT: usize = 12;
        if self.edges.len() > LIMIT {
            return Err(Error::Unsupported(format!(
                "path enumeration is limited to {LIMIT} edges, the diagram has {}",
                self.edges.len()
            )));
        }
        let mut by_ends: BTreeMap<(String, String), Vec<Vec<String>>> = BTreeMap::new();
        for start in self.nodes.keys() {
            let mut stack = Vec::new();
            self.walk(start, &mut vec![start.clone()], &mut stack, &mut by_ends);
        }
        let mut goals = Vec::new();
        for ((s, t), paths) in by_ends {
            for i in 0..paths.len() {
                for j in i + 1..paths.len() {
                    let mut lhs = paths[i].clone();
                    let mut rhs = paths[j].clone();
                    lhs.reverse();
                    rhs.reverse();
                    goals.push(Goal {
                        name: format!("{s}->{t}#{}", goals.len() + 1),
                        lhs: Path::of(&lhs),
                        rhs: Path::of(&rhs),
                    });
                }
            }
        }
        Ok(goals)
    }

    fn walk(
        &self,
        at: &str,
        visited: &mut Vec<String>,
        taken: &mut Vec<String>,
        out: &mut BTreeMap<(String, String), Vec<Vec<String>>>,
    ) {
        for e in self.edges.values().filter(|e| e.source == at) {
            if visited.contains(&e.target) {
                continue;
            }
            taken.push(e.name.clone());
            visited.push(e.target.clone());
            out.entry((visited[0].clone(), e.target.clone()))
                .or_default()
                .push(taken.clone());
            self.walk(&e.target, visited, taken, out);
            visited.pop();
            taken.pop();
        }
    }
}

#[derive(Clone, Debug)]
pub struct GoalReport {
    pub goal: String,
    pub verdict: Verdict,
    pub left: FreeMor,
    pub right: FreeMor,
}

#[derive(Clone, Debug)]
pub struct Side {
    pub dissolved: FreeMor,
    pub word: String,
    pub nf: String,
    pub perm: Permutation,
}

impl Side {
    fn of(m: &FreeMor) -> Side {
        let perm = m.permutation();
        let (word, nf) = match m.content() {
            Content::Braid(w) => (w.to_string(), w.normal_form().to_string()),
            Content::Perm(p) => (positive_word(p, p.len()).to_string(), p.to_literal()),
            Content::Plain(_) => (String::new(), "id".into()),
        };
        Side {
            dissolved: m.clone(),
            word,
            nf,
            perm,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LambdaImages {
    pub functor: String,
    pub left: FreeMor,
    pub right: FreeMor,
    pub equal: bool,
}

#[derive(Clone, Debug)]
pub struct Explanation {
    pub goal: String,
    pub verdict: Verdict,
    pub flavor: Flavor,
    pub left: Side,
    pub right: Side,
    /// Per generator of `G′`: self-permutations of the left and right sides.
    pub projections: BTreeMap<String, (Permutation, Permutation)>,
    pub lambda: Option<LambdaImages>,
}

impl Explanation {
    pub fn to_json(&self) -> VerdictJson {
        let side = |s: &Side| SideJson {
            word: s.word.clone(),
            nf: s.nf.clone(),
            perm: s.perm.one_line(),
        };
        VerdictJson {
            goal: self.goal.clone(),
            verdict: self.verdict,
            left: side(&self.left),
            right: side(&self.right),
            projections: self
                .projections
                .iter()
                .map(|(g, (l, r))| {
                    (
                        g.clone(),
                        ProjectionJson {
                            left: l.one_line(),
                            right: r.one_line(),
                        },
                    )
                })
                .collect(),
        }
    }
}

impl fmt::Display for Explanation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "goal {}: {} (flavor {})", self.goal, self.verdict, self.flavor)?;
        for (label, s) in [("left ", &self.left), ("right", &self.right)] {
            writeln!(f, "  {label} {}", s.dissolved)?;
            writeln!(f, "        nf {}   perm {}", s.nf, s.perm)?;
        }
        for (g, (l, r)) in &self.projections {
            let mark = if l == r { "=" } else { "≠" };
            writeln!(f, "  {g}-permutation  {l} {mark} {r}")?;
        }
        if let Some(lam) = &self.lambda {
            writeln!(f, "  under {}:", lam.functor)?;
            writeln!(f, "    left  {}", lam.left)?;
            writeln!(f, "    right {}", lam.right)?;
            writeln!(f, "    images {}", if lam.equal { "agree" } else { "differ" })?;
        }
        Ok(())
    }
}

/// The machine-readable verdict for one goal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictJson {
    pub goal: String,
    pub verdict: Verdict,
    pub left: SideJson,
    pub right: SideJson,
    pub projections: BTreeMap<String, ProjectionJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SideJson {
    pub word: String,
    pub nf: String,
    pub perm: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectionJson {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

pub fn compose_path(d: &Diagram, path: &Path) -> Result<UMor> {
    d.compose_path(path)
}

pub fn check_goal(d: &Diagram, goal: &Goal) -> Result<Verdict> {
    Ok(d.check_goal(goal)?.verdict)
}

pub fn explain_goal(d: &Diagram, goal: &Goal) -> Result<Explanation> {
    d.explain_goal(goal)
}
