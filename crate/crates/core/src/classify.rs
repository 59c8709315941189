//! Inference over a small knowledge base of links.
//!
//! Each record carries a braid and optional relations to other records
//! (mirror, split sum, connected sum). From invariants of the braid closure
//! the engine assembles intervals for χ_s and χ_s⁻, then runs a monotone
//! rule set to a fixpoint, deciding membership in 𝒬 ⊂ 𝒮ℬ ⊂ ℬ. Every verdict
//! keeps all the derivations found for it.
//!
//! Derivations are tagged with the comment letters of the classification
//! table: rule letters (a) χ gap, (b) zero-linking, (c) sum of a
//! non-quasipositive link, (d)/(h)/(j) axioms, (f) mirror obstruction,
//! (i) FWM; and bound letters (e) additivity over strong summands and
//! (g) "no disk component".
//!
//! ```
//! use linkbound::classify::{apply_rules, prepare, Class, ClassifyOptions, KnowledgeBase, Verdict};
//!
//! let kb = KnowledgeBase::parse(
//!     "link H BR[2,{1,1}]\nlink H* BR[2,{-1,-1}]\nantimirror H* H\n",
//! ).unwrap();
//! let ledger = apply_rules(&prepare(&kb, &ClassifyOptions::default()).unwrap()).unwrap();
//! assert_eq!(ledger.verdict("H", Class::Q), Verdict::Yes);
//! assert_eq!(ledger.verdict("H*", Class::B), Verdict::No);
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::braid::{
    braid_equal, chi_minus_lower_bound, BraidWord, QPFactor, QPFactorization, SearchBudget,
    SearchOutcome,
};
use crate::diagram::{
    determinant, linking_matrix_of_closure, murasugi_chi_upper, seifert_matrix_of_closure,
    signature, zero_linking_sublinks, LinkingMatrix, PDDiagram,
};
use crate::homfly::{fwm_obstruction, homfly_pd_with_budget, HomflyError, DEFAULT_SKEIN_BUDGET};
use crate::notation::parse_braid;
use crate::poly::LaurentPoly2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown link `{0}`")]
    UnknownLink(String),
    #[error("certificate of `{name}` does not expand to its braid")]
    Certificate { name: String },
    #[error("relation of `{name}` fails: {message}")]
    Relation { name: String, message: String },
    #[error("`{link}`: {message}")]
    Invariant { link: String, message: String },
    #[error(transparent)]
    Homfly(#[from] HomflyError),
    #[error("`{link}`: {quantity} lower bound {lo} from {lo_source} exceeds upper bound {hi} from {hi_source}")]
    Interval { link: String, quantity: String, lo: i64, lo_source: String, hi: i64, hi_source: String },
    #[error("`{link}` in {class}: both yes and no derived\n{trace}")]
    Contradiction { link: String, class: Class, trace: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    Q,
    SB,
    B,
}

impl Class {
    pub const ALL: [Class; 3] = [Class::Q, Class::SB, Class::B];

    fn index(self) -> usize {
        self as usize
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "Q" => Some(Class::Q),
            "SB" => Some(Class::SB),
            "B" => Some(Class::B),
            _ => None,
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Q => "Q",
            Class::SB => "SB",
            Class::B => "B",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChiBounds {
    pub chi_s: Interval,
    pub chi_s_minus: Interval,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    /// This link is the mirror of the named one.
    Mirror(String),
    /// This link is the mirror of the named one with all orientations
    /// reversed, `−L*`.
    AntiMirror(String),
    SplitSum(String, String),
    /// Connected sum along the last strand of the first braid and the first
    /// strand of the second.
    ConnectedSum(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkRecord {
    pub name: String,
    pub braid: BraidWord,
    pub qp_certificate: Option<QPFactorization>,
    pub relations: Vec<Relation>,
    /// All components are outer in some ℂ-boundary realization.
    pub outer: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axiom {
    pub link: String,
    pub class: Class,
    pub member: bool,
    pub letter: Option<char>,
    pub citation: String,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = if self.member { "yes" } else { "no" };
        write!(f, "{} {} {}", self.link, self.class, v)?;
        if let Some(l) = self.letter {
            write!(f, " ({l})")?;
        }
        write!(f, ": {}", self.citation)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedCell {
    pub member: bool,
    pub letters: BTreeSet<char>,
}

impl fmt::Display for ExpectedCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.member { "yes" } else { "no" })?;
        write_letters(f, &self.letters)
    }
}

fn write_letters(f: &mut impl fmt::Write, letters: &BTreeSet<char>) -> fmt::Result {
    if !letters.is_empty() {
        let v: Vec<String> = letters.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", v.join(","))?;
    }
    Ok(())
}

/// One transcribed row of the classification table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub name: String,
    pub cells: [ExpectedCell; 3],
    /// Stated χ_s, read as an upper bound.
    pub chi_s: Option<i64>,
    /// Stated χ_s⁻, read as a lower bound.
    pub chi_s_minus: Option<i64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnowledgeBase {
    pub records: Vec<LinkRecord>,
    pub axioms: Vec<Axiom>,
    pub rows: Vec<TableRow>,
}

const RULE_LETTERS: [char; 8] = ['a', 'b', 'c', 'd', 'f', 'h', 'i', 'j'];
const BOUND_LETTERS: [char; 2] = ['e', 'g'];

impl KnowledgeBase {
    pub fn index(&self, name: &str) -> Option<usize> {
        self.records.iter().position(|r| r.name == name)
    }

    pub fn record(&self, name: &str) -> Option<&LinkRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    /// Parse the line-based format:
    ///
    /// ```text
    /// link NAME BR[n,{..}]
    /// cert NAME [w]j [w]j ..          factors w σ_j w⁻¹
    /// mirror NAME OF | antimirror NAME OF
    /// split NAME A B | connect NAME A B
    /// outer NAME
    /// axiom NAME Q|SB|B yes|no LETTER|- citation ..
    /// row NAME Q SB B CHI_S|- CHI_S_MINUS|-     cells like yes, no(a), no(f,e)
    /// ```
    ///
    /// A name must be declared by `link` before any other line uses it.
    pub fn parse(src: &str) -> Result<Self, ClassifyError> {
        let mut kb = KnowledgeBase::default();
        for (ln, raw) in src.lines().enumerate() {
            let line = raw.split('%').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |m: String| ClassifyError::Parse { line: ln + 1, message: m };
            let toks: Vec<&str> = line.split_whitespace().collect();
            let need = |k: usize| -> Result<(), ClassifyError> {
                if toks.len() < k {
                    Err(err(format!("`{}` needs {} fields", toks[0], k - 1)))
                } else {
                    Ok(())
                }
            };
            let known = |kb: &KnowledgeBase, name: &str| -> Result<usize, ClassifyError> {
                kb.index(name).ok_or_else(|| err(format!("unknown link `{name}`")))
            };
            match toks[0] {
                "link" => {
                    need(3)?;
                    if kb.index(toks[1]).is_some() {
                        return Err(err(format!("duplicate link `{}`", toks[1])));
                    }
                    let braid = parse_braid(&toks[2..].join(" ")).map_err(|e| err(e.to_string()))?;
                    kb.records.push(LinkRecord {
                        name: toks[1].to_string(),
                        braid,
                        qp_certificate: None,
                        relations: Vec::new(),
                        outer: false,
                    });
                }
                "cert" => {
                    need(2)?;
                    let i = known(&kb, toks[1])?;
                    let factors =
                        toks[2..].iter().map(|t| parse_factor(t)).collect::<Result<Vec<_>, _>>().map_err(err)?;
                    let n = kb.records[i].braid.strands();
                    let q = QPFactorization::new(n, factors).map_err(|e| err(e.to_string()))?;
                    kb.records[i].qp_certificate = Some(q);
                }
                "mirror" | "antimirror" => {
                    need(3)?;
                    let i = known(&kb, toks[1])?;
                    known(&kb, toks[2])?;
                    let of = toks[2].to_string();
                    let rel = if toks[0] == "mirror" { Relation::Mirror(of) } else { Relation::AntiMirror(of) };
                    kb.records[i].relations.push(rel);
                }
                "split" | "connect" => {
                    need(4)?;
                    let i = known(&kb, toks[1])?;
                    known(&kb, toks[2])?;
                    known(&kb, toks[3])?;
                    let (a, b) = (toks[2].to_string(), toks[3].to_string());
                    let rel = if toks[0] == "split" { Relation::SplitSum(a, b) } else { Relation::ConnectedSum(a, b) };
                    kb.records[i].relations.push(rel);
                }
                "outer" => {
                    need(2)?;
                    let i = known(&kb, toks[1])?;
                    kb.records[i].outer = true;
                }
                "axiom" => {
                    need(6)?;
                    known(&kb, toks[1])?;
                    let class = Class::parse(toks[2]).ok_or_else(|| err(format!("unknown class `{}`", toks[2])))?;
                    let member = parse_yes_no(toks[3]).ok_or_else(|| err(format!("expected yes/no, found `{}`", toks[3])))?;
                    let letter = match toks[4] {
                        "-" => None,
                        t if t.len() == 1 && RULE_LETTERS.contains(&t.chars().next().unwrap()) => t.chars().next(),
                        t => return Err(err(format!("bad comment letter `{t}`"))),
                    };
                    kb.axioms.push(Axiom {
                        link: toks[1].to_string(),
                        class,
                        member,
                        letter,
                        citation: toks[5..].join(" "),
                    });
                }
                "row" => {
                    need(7)?;
                    known(&kb, toks[1])?;
                    let cell = |t: &str| parse_cell(t).ok_or_else(|| err(format!("bad cell `{t}`")));
                    let chi = |t: &str| -> Result<Option<i64>, ClassifyError> {
                        if t == "-" {
                            Ok(None)
                        } else {
                            t.parse().map(Some).map_err(|_| err(format!("bad χ value `{t}`")))
                        }
                    };
                    kb.rows.push(TableRow {
                        name: toks[1].to_string(),
                        cells: [cell(toks[2])?, cell(toks[3])?, cell(toks[4])?],
                        chi_s: chi(toks[5])?,
                        chi_s_minus: chi(toks[6])?,
                    });
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        Ok(kb)
    }

    /// The same knowledge base with one axiom left out.
    pub fn without_axiom(&self, k: usize) -> Self {
        let mut kb = self.clone();
        kb.axioms.remove(k);
        kb
    }
}

fn parse_yes_no(s: &str) -> Option<bool> {
    match s {
        "yes" => Some(true),
        "no" => Some(false),
        _ => None,
    }
}

/// `yes`, `no`, `no(a)`, `yes(d)`, `no(f,e)`.
fn parse_cell(s: &str) -> Option<ExpectedCell> {
    let (head, letters) = match s.find('(') {
        Some(i) => {
            let inner = s[i + 1..].strip_suffix(')')?;
            let mut set = BTreeSet::new();
            for part in inner.split(',') {
                let mut cs = part.trim().chars();
                let c = cs.next()?;
                if cs.next().is_some() || !(RULE_LETTERS.contains(&c) || BOUND_LETTERS.contains(&c)) {
                    return None;
                }
                set.insert(c);
            }
            (&s[..i], set)
        }
        None => (s, BTreeSet::new()),
    };
    Some(ExpectedCell { member: parse_yes_no(head)?, letters })
}

/// Whitespace-separated factors, each `[w1,w2,..]j` for `w σ_j w⁻¹`.
pub fn parse_qp_factors(s: &str) -> Result<Vec<QPFactor>, String> {
    s.split_whitespace().map(parse_factor).collect()
}

fn parse_factor(s: &str) -> Result<QPFactor, String> {
    let bad = || format!("bad certificate factor `{s}`");
    let rest = s.strip_prefix('[').ok_or_else(bad)?;
    let close = rest.find(']').ok_or_else(bad)?;
    let conj = rest[..close]
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i32>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    let generator = rest[close + 1..].parse::<usize>().map_err(|_| bad())?;
    Ok(QPFactor { conjugator: conj, generator })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub skein_budget: usize,
    pub search: SearchBudget,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { skein_budget: DEFAULT_SKEIN_BUDGET, search: SearchBudget::default() }
    }
}

/// Invariants of one braid closure used by the rules.
#[derive(Debug, Clone)]
pub struct LinkFacts {
    pub mu: usize,
    pub bennequin: i64,
    pub murasugi: i64,
    /// A knot whose determinant is not a square, hence not slice.
    pub nonsquare_knot_determinant: bool,
    pub lk: LinkingMatrix,
    pub zero_linking: Vec<Vec<usize>>,
    /// No component can bound a disk of a surface in B⁴: each is linked
    /// with the rest or is a knot that is not slice.
    pub no_disk_component: bool,
    pub search: SearchOutcome,
    pub homfly: LaurentPoly2,
    pub nontrivial: bool,
}

fn is_square(n: &BigInt) -> bool {
    let r = n.sqrt();
    &(&r * &r) == n
}

fn parity_down(x: i64, mu: usize) -> i64 {
    if (x - mu as i64).rem_euclid(2) == 0 {
        x
    } else {
        x - 1
    }
}

fn parity_up(x: i64, mu: usize) -> i64 {
    if (x - mu as i64).rem_euclid(2) == 0 {
        x
    } else {
        x + 1
    }
}

/// Upper bound for χ_s of a knot from the signature and the determinant.
fn knot_chi_upper(b: &BraidWord) -> i64 {
    let s = seifert_matrix_of_closure(b);
    let sig = signature(&s);
    let mut hi = murasugi_chi_upper(sig.sigma, sig.nullity).min(1);
    if !is_square(&determinant(&s)) {
        hi = hi.min(-1);
    }
    parity_down(hi, 1)
}

pub fn link_facts(b: &BraidWord, opts: &ClassifyOptions) -> Result<LinkFacts, HomflyError> {
    let mu = b.closure_components().len();
    let seifert = seifert_matrix_of_closure(b);
    let sig = signature(&seifert);
    let lk = linking_matrix_of_closure(b);
    let no_disk_component =
        (0..mu).all(|c| lk.row_sum(c) != 0 || knot_chi_upper(&b.sublink(&[c])) < 1);
    let homfly = homfly_pd_with_budget(&PDDiagram::from_braid_closure(b), opts.skein_budget)?.poly;
    Ok(LinkFacts {
        mu,
        bennequin: b.bennequin_chi() as i64,
        murasugi: murasugi_chi_upper(sig.sigma, sig.nullity),
        nonsquare_knot_determinant: mu == 1 && !is_square(&determinant(&seifert)),
        zero_linking: zero_linking_sublinks(&lk),
        lk,
        no_disk_component,
        search: chi_minus_lower_bound(b, opts.search),
        nontrivial: homfly != LaurentPoly2::unlink(mu),
        homfly,
    })
}

/// A validated knowledge base with invariants computed for every record.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub kb: KnowledgeBase,
    pub facts: Vec<LinkFacts>,
    /// Verified certificate, explicit or read off a positive word.
    pub certificates: Vec<Option<QPFactorization>>,
}

impl Prepared {
    pub fn without_axiom(&self, k: usize) -> Self {
        Self { kb: self.kb.without_axiom(k), ..self.clone() }
    }
}

/// Verify certificates and relations, then compute invariants (records in
/// parallel). Certificate failures are reported before anything else.
pub fn prepare(kb: &KnowledgeBase, opts: &ClassifyOptions) -> Result<Prepared, ClassifyError> {
    let mut certificates = Vec::new();
    for r in &kb.records {
        let cert = match &r.qp_certificate {
            Some(q) => {
                let ok = q.strands() == r.braid.strands()
                    && braid_equal(&q.expand(), &r.braid).unwrap_or(false);
                if !ok {
                    return Err(ClassifyError::Certificate { name: r.name.clone() });
                }
                Some(q.clone())
            }
            None => QPFactorization::from_positive(&r.braid),
        };
        certificates.push(cert);
    }
    for a in &kb.axioms {
        kb.index(&a.link).ok_or_else(|| ClassifyError::UnknownLink(a.link.clone()))?;
    }
    for row in &kb.rows {
        kb.index(&row.name).ok_or_else(|| ClassifyError::UnknownLink(row.name.clone()))?;
    }
    let facts = kb
        .records
        .par_iter()
        .map(|r| link_facts(&r.braid, opts))
        .collect::<Result<Vec<_>, _>>()?;
    let idx = |name: &str| kb.index(name).ok_or_else(|| ClassifyError::UnknownLink(name.to_string()));
    for (i, r) in kb.records.iter().enumerate() {
        let fail = |m: String| ClassifyError::Relation { name: r.name.clone(), message: m };
        for rel in &r.relations {
            match rel {
                Relation::Mirror(of) | Relation::AntiMirror(of) => {
                    let j = idx(of)?;
                    if facts[i].homfly != facts[j].homfly.mirror() {
                        return Err(fail(format!("HOMFLY is not the mirror of that of `{of}`")));
                    }
                }
                Relation::SplitSum(a, b) | Relation::ConnectedSum(a, b) => {
                    let (ja, jb) = (idx(a)?, idx(b)?);
                    let split = matches!(rel, Relation::SplitSum(..));
                    let mut p = &facts[ja].homfly * &facts[jb].homfly;
                    let mut mu = facts[ja].mu + facts[jb].mu;
                    if split {
                        p = &p * &LaurentPoly2::delta();
                    } else {
                        mu -= 1;
                    }
                    if facts[i].mu != mu {
                        return Err(fail(format!("expected {mu} components, found {}", facts[i].mu)));
                    }
                    if facts[i].homfly != p {
                        let what = if split { "P(A)P(B)(v⁻¹−v)/z" } else { "P(A)P(B)" };
                        return Err(fail(format!("HOMFLY differs from {what} for `{a}`, `{b}`")));
                    }
                }
            }
        }
    }
    Ok(Prepared { kb: kb.clone(), facts, certificates })
}

/// Where one endpoint of a χ interval comes from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundSource {
    pub rule: &'static str,
    pub link: String,
    pub letters: BTreeSet<char>,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.rule, self.link)?;
        write_letters(f, &self.letters)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endpoint {
    pub value: i64,
    /// Every source that attains `value`.
    pub sources: BTreeSet<BoundSource>,
}

impl Endpoint {
    fn new(value: i64, source: BoundSource) -> Self {
        Self { value, sources: BTreeSet::from([source]) }
    }

    fn letters(&self) -> BTreeSet<char> {
        self.sources.iter().flat_map(|s| s.letters.iter().copied()).collect()
    }

    fn describe(&self) -> String {
        let v: Vec<String> = self.sources.iter().map(|s| s.to_string()).collect();
        v.join(", ")
    }

    /// Move toward `value` (upward when `lower`), or record another source
    /// for the same value.
    fn improve(&mut self, value: i64, sources: &BTreeSet<BoundSource>, lower: bool) -> bool {
        let tighter = if lower { value > self.value } else { value < self.value };
        if tighter {
            self.value = value;
            self.sources = sources.clone();
            true
        } else if value == self.value && !sources.is_subset(&self.sources) {
            self.sources.extend(sources.iter().cloned());
            true
        } else {
            false
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracedInterval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl TracedInterval {
    pub fn interval(&self) -> Interval {
        Interval { lo: self.lo.value, hi: self.hi.value }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracedBounds {
    pub chi_s: TracedInterval,
    pub chi_s_minus: TracedInterval,
}

impl TracedBounds {
    pub fn plain(&self) -> ChiBounds {
        ChiBounds { chi_s: self.chi_s.interval(), chi_s_minus: self.chi_s_minus.interval() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    /// A verified quasipositive factorization.
    Certificate,
    /// R1: a nontrivial quasipositive link has a non-quasipositive mirror.
    Mirror,
    /// R2: a sum with a non-quasipositive summand is not quasipositive.
    SumNotQ,
    /// R3: χ_s ≠ χ_s⁻ excludes strong ℂ-boundaries.
    ChiGap,
    /// R4: not strong and no zero-linking proper sublink excludes ℂ-boundaries.
    ZeroLinking,
    /// R5: sums of members are members.
    SumClosure,
    /// R6: `L ∈ 𝒮ℬ`, `−L* ∈ ℬ` force `χ_s(L) ≥ 1`.
    MirrorObstruction,
    /// R7: Franks–Williams–Morton.
    Fwm,
    /// R8: 𝒬 ⊂ 𝒮ℬ ⊂ ℬ.
    Inclusion,
    /// R10: an accepted fact with a citation.
    Axiom,
}

impl Rule {
    pub fn code(&self) -> &'static str {
        match self {
            Rule::Certificate | Rule::Inclusion => "R8",
            Rule::Mirror => "R1",
            Rule::SumNotQ => "R2",
            Rule::ChiGap => "R3",
            Rule::ZeroLinking => "R4",
            Rule::SumClosure => "R5",
            Rule::MirrorObstruction => "R6",
            Rule::Fwm => "R7",
            Rule::Axiom => "R10",
        }
    }

    fn letter(&self) -> Option<char> {
        match self {
            Rule::SumNotQ => Some('c'),
            Rule::ChiGap => Some('a'),
            Rule::ZeroLinking => Some('b'),
            Rule::MirrorObstruction => Some('f'),
            Rule::Fwm => Some('i'),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub rule: Rule,
    pub detail: String,
    pub premises: Vec<String>,
    /// Comment letters of the rule (and of an axiom).
    pub letters: BTreeSet<char>,
    /// Comment letters of the χ bounds the rule used.
    pub bound_letters: BTreeSet<char>,
}

impl Derivation {
    fn same_argument(&self, other: &Self) -> bool {
        self.rule == other.rule
            && self.premises == other.premises
            && self.letters == other.letters
            && self.bound_letters == other.bound_letters
    }

    pub fn all_letters(&self) -> BTreeSet<char> {
        self.letters.union(&self.bound_letters).copied().collect()
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.rule.code(), self.detail)?;
        if !self.premises.is_empty() {
            write!(f, " <- {}", self.premises.join("; "))?;
        }
        let l = self.all_letters();
        if !l.is_empty() {
            f.write_char(' ')?;
            write_letters(f, &l)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellVerdict {
    pub verdict: Verdict,
    pub derivations: Vec<Derivation>,
}

impl Default for CellVerdict {
    fn default() -> Self {
        Self { verdict: Verdict::Unknown, derivations: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictLedger {
    pub names: Vec<String>,
    pub cells: Vec<[CellVerdict; 3]>,
    pub bounds: Vec<TracedBounds>,
}

impl VerdictLedger {
    fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn cell(&self, name: &str, class: Class) -> Option<&CellVerdict> {
        self.position(name).map(|i| &self.cells[i][class.index()])
    }

    pub fn verdict(&self, name: &str, class: Class) -> Verdict {
        self.cell(name, class).map_or(Verdict::Unknown, |c| c.verdict)
    }

    pub fn bounds(&self, name: &str) -> Option<&TracedBounds> {
        self.position(name).map(|i| &self.bounds[i])
    }

    /// 𝒬 yes ⇒ 𝒮ℬ yes ⇒ ℬ yes and ℬ no ⇒ 𝒮ℬ no ⇒ 𝒬 no, for every link.
    pub fn is_chain_consistent(&self) -> bool {
        self.cells.iter().all(|c| {
            let v = |k: usize| c[k].verdict;
            (v(0) != Verdict::Yes || v(1) == Verdict::Yes)
                && (v(1) != Verdict::Yes || v(2) == Verdict::Yes)
                && (v(2) != Verdict::No || v(1) == Verdict::No)
                && (v(1) != Verdict::No || v(0) == Verdict::No)
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, name) in self.names.iter().enumerate() {
            let b = self.bounds[i].plain();
            let _ = writeln!(out, "{name}: chi_s {} chi_s- {}", b.chi_s, b.chi_s_minus);
            for class in Class::ALL {
                let c = &self.cells[i][class.index()];
                let _ = writeln!(out, "  {class} {}", c.verdict);
                for d in &c.derivations {
                    let _ = writeln!(out, "    {d}");
                }
            }
        }
        out
    }

    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for (i, name) in self.names.iter().enumerate() {
            let b = self.bounds[i].plain();
            let _ = writeln!(out, "{name}.chi_s={},{}", b.chi_s.lo, b.chi_s.hi);
            let _ = writeln!(out, "{name}.chi_s_minus={},{}", b.chi_s_minus.lo, b.chi_s_minus.hi);
            for class in Class::ALL {
                let c = &self.cells[i][class.index()];
                let _ = writeln!(out, "{name}.{class}={}", c.verdict);
                for (k, d) in c.derivations.iter().enumerate() {
                    let _ = writeln!(out, "{name}.{class}.trace{k}={d}");
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sum {
    Split,
    Connected,
}

struct Engine<'a> {
    p: &'a Prepared,
    /// (x, y, reversed): y is the mirror of x, `−x*` when reversed.
    mirrors: Vec<(usize, usize, bool)>,
    sums: Vec<(usize, usize, usize, Sum)>,
    bounds: Vec<TracedBounds>,
    cells: Vec<[CellVerdict; 3]>,
}

fn src(rule: &'static str, link: &str, letters: &[char]) -> BTreeSet<BoundSource> {
    BTreeSet::from([BoundSource { rule, link: link.to_string(), letters: letters.iter().copied().collect() }])
}

impl<'a> Engine<'a> {
    fn new(p: &'a Prepared) -> Result<Self, ClassifyError> {
        let kb = &p.kb;
        let idx = |n: &str| kb.index(n).ok_or_else(|| ClassifyError::UnknownLink(n.to_string()));
        let (mut mirrors, mut sums) = (Vec::new(), Vec::new());
        for (i, r) in kb.records.iter().enumerate() {
            for rel in &r.relations {
                match rel {
                    Relation::Mirror(of) => mirrors.push((idx(of)?, i, false)),
                    Relation::AntiMirror(of) => mirrors.push((idx(of)?, i, true)),
                    Relation::SplitSum(a, b) => sums.push((i, idx(a)?, idx(b)?, Sum::Split)),
                    Relation::ConnectedSum(a, b) => sums.push((i, idx(a)?, idx(b)?, Sum::Connected)),
                }
            }
        }
        let bounds = kb
            .records
            .iter()
            .zip(&p.facts)
            .map(|(r, f)| {
                let mu = f.mu as i64;
                let base = TracedInterval {
                    lo: Endpoint::new(f.bennequin, src("bennequin", &r.name, &[]).pop_first().unwrap()),
                    hi: Endpoint::new(mu, src("components", &r.name, &[]).pop_first().unwrap()),
                };
                TracedBounds { chi_s: base.clone(), chi_s_minus: base }
            })
            .collect();
        let cells = vec![Default::default(); kb.records.len()];
        Ok(Self { p, mirrors, sums, bounds, cells })
    }

    fn name(&self, i: usize) -> &str {
        &self.p.kb.records[i].name
    }

    fn verdict(&self, i: usize, c: Class) -> Verdict {
        self.cells[i][c.index()].verdict
    }

    fn is(&self, i: usize, c: Class, member: bool) -> bool {
        self.verdict(i, c) == if member { Verdict::Yes } else { Verdict::No }
    }

    fn fact(&self, i: usize, c: Class, member: bool) -> String {
        format!("{} {} {}", self.name(i), if member { "∈" } else { "∉" }, c)
    }

    fn local_bounds(&mut self, i: usize) -> bool {
        let f = &self.p.facts[i];
        let name = self.p.kb.records[i].name.clone();
        let sb_yes = self.is(i, Class::SB, true);
        let b = &mut self.bounds[i];
        let mut ch = false;
        if let Some(q) = &self.p.certificates[i] {
            let k = q.chi() as i64;
            let s = src("certificate", &name, &[]);
            ch |= b.chi_s.lo.improve(k, &s, true);
            ch |= b.chi_s.hi.improve(k, &s, false);
        }
        ch |= b.chi_s.hi.improve(f.murasugi, &src("murasugi", &name, &[]), false);
        if f.nonsquare_knot_determinant {
            ch |= b.chi_s.hi.improve(-1, &src("determinant", &name, &[]), false);
        }
        if f.no_disk_component {
            ch |= b.chi_s.hi.improve(0, &src("no-disk", &name, &['g']), false);
        }
        if f.search.bound > i32::MIN {
            ch |= b.chi_s_minus.lo.improve(f.search.bound as i64, &src("search", &name, &[]), true);
        }
        // χ_s ≤ χ_s⁻
        let (lo, hi) = (b.chi_s.lo.clone(), b.chi_s_minus.hi.clone());
        ch |= b.chi_s_minus.lo.improve(lo.value, &lo.sources, true);
        ch |= b.chi_s.hi.improve(hi.value, &hi.sources, false);
        if sb_yes {
            let (lo, hi) = (b.chi_s_minus.lo.clone(), b.chi_s.hi.clone());
            ch |= b.chi_s.lo.improve(lo.value, &lo.sources, true);
            ch |= b.chi_s_minus.hi.improve(hi.value, &hi.sources, false);
        }
        // χ ≡ μ (mod 2) for surfaces without closed components
        for iv in [&mut b.chi_s, &mut b.chi_s_minus] {
            let (l, h) = (parity_up(iv.lo.value, f.mu), parity_down(iv.hi.value, f.mu));
            let (ls, hs) = (iv.lo.sources.clone(), iv.hi.sources.clone());
            ch |= iv.lo.improve(l, &ls, true);
            ch |= iv.hi.improve(h, &hs, false);
        }
        ch
    }

    fn relational_bounds(&mut self) -> bool {
        let mut ch = false;
        for &(x, y, _) in &self.mirrors.clone() {
            for (a, b) in [(x, y), (y, x)] {
                let from = self.bounds[a].chi_s.clone();
                let to = &mut self.bounds[b].chi_s;
                ch |= to.lo.improve(from.lo.value, &from.lo.sources, true);
                ch |= to.hi.improve(from.hi.value, &from.hi.sources, false);
            }
        }
        for &(s, a, b, kind) in &self.sums.clone() {
            let drop = if kind == Sum::Connected { 1 } else { 0 };
            let name = self.name(s).to_string();
            let (ba, bb) = (self.bounds[a].clone(), self.bounds[b].clone());
            // a union of surfaces, joined by a band for a connected sum
            let union = src("union", &name, &[]);
            let t = &mut self.bounds[s];
            ch |= t.chi_s.lo.improve(ba.chi_s.lo.value + bb.chi_s.lo.value - drop, &union, true);
            ch |= t.chi_s_minus.lo.improve(
                ba.chi_s_minus.lo.value + bb.chi_s_minus.lo.value - drop,
                &union,
                true,
            );
            if self.is(a, Class::SB, true) && self.is(b, Class::SB, true) {
                let add = src("additivity", &name, &['e']);
                let t = &mut self.bounds[s];
                ch |= t.chi_s.lo.improve(ba.chi_s.lo.value + bb.chi_s.lo.value - drop, &add, true);
                ch |= t.chi_s.hi.improve(ba.chi_s.hi.value + bb.chi_s.hi.value - drop, &add, false);
            }
        }
        ch
    }

    fn check_intervals(&self) -> Result<(), ClassifyError> {
        for (i, b) in self.bounds.iter().enumerate() {
            for (q, iv) in [("chi_s", &b.chi_s), ("chi_s-", &b.chi_s_minus)] {
                if iv.lo.value > iv.hi.value {
                    return Err(ClassifyError::Interval {
                        link: self.name(i).to_string(),
                        quantity: q.to_string(),
                        lo: iv.lo.value,
                        lo_source: iv.lo.describe(),
                        hi: iv.hi.value,
                        hi_source: iv.hi.describe(),
                    });
                }
            }
        }
        Ok(())
    }

    fn add(&mut self, i: usize, class: Class, member: bool, d: Derivation) -> Result<bool, ClassifyError> {
        let want = if member { Verdict::Yes } else { Verdict::No };
        let cell = &mut self.cells[i][class.index()];
        match cell.verdict {
            Verdict::Unknown => {
                cell.verdict = want;
                cell.derivations.push(d);
                Ok(true)
            }
            v if v == want => {
                if cell.derivations.iter().any(|e| e.same_argument(&d)) {
                    Ok(false)
                } else {
                    cell.derivations.push(d);
                    Ok(true)
                }
            }
            _ => {
                let mut trace = String::new();
                for e in &cell.derivations {
                    let _ = writeln!(trace, "  {} {}: {e}", class, cell.verdict);
                }
                let _ = writeln!(trace, "  {} {want}: {d}", class);
                Err(ClassifyError::Contradiction { link: self.p.kb.records[i].name.clone(), class, trace })
            }
        }
    }

    fn derive(rule: Rule, detail: String, premises: Vec<String>, bound_letters: BTreeSet<char>) -> Derivation {
        Derivation { rule, detail, premises, letters: rule.letter().into_iter().collect(), bound_letters }
    }

    fn membership(&mut self) -> Result<bool, ClassifyError> {
        let n = self.p.kb.records.len();
        let mut ch = false;
        for i in 0..n {
            if let Some(q) = &self.p.certificates[i] {
                let d = Self::derive(Rule::Certificate, format!("{} factors on {} strands", q.len(), q.strands()), vec![], BTreeSet::new());
                ch |= self.add(i, Class::Q, true, d)?;
            }
        }
        for a in self.p.kb.axioms.clone() {
            let i = self.p.kb.index(&a.link).ok_or_else(|| ClassifyError::UnknownLink(a.link.clone()))?;
            let d = Derivation {
                rule: Rule::Axiom,
                detail: a.citation.clone(),
                premises: vec![],
                letters: a.letter.into_iter().collect(),
                bound_letters: BTreeSet::new(),
            };
            ch |= self.add(i, a.class, a.member, d)?;
        }
        for i in 0..n {
            // inclusion chain, both directions
            for (lo, hi) in [(Class::Q, Class::SB), (Class::SB, Class::B)] {
                if self.is(i, lo, true) {
                    let d = Self::derive(Rule::Inclusion, format!("{lo} ⊂ {hi}"), vec![self.fact(i, lo, true)], BTreeSet::new());
                    ch |= self.add(i, hi, true, d)?;
                }
            }
            for (lo, hi) in [(Class::SB, Class::B), (Class::Q, Class::SB)] {
                if self.is(i, hi, false) {
                    let d = Self::derive(Rule::Inclusion, format!("{lo} ⊂ {hi}"), vec![self.fact(i, hi, false)], BTreeSet::new());
                    ch |= self.add(i, lo, false, d)?;
                }
            }
            // χ_s ≠ χ_s⁻
            let b = self.bounds[i].clone();
            if b.chi_s.hi.value < b.chi_s_minus.lo.value {
                let letters = b.chi_s.hi.letters().union(&b.chi_s_minus.lo.letters()).copied().collect();
                let detail = format!("chi_s ≤ {} < {} ≤ chi_s-", b.chi_s.hi.value, b.chi_s_minus.lo.value);
                let d = Self::derive(Rule::ChiGap, detail, vec![b.chi_s.hi.describe(), b.chi_s_minus.lo.describe()], letters);
                ch |= self.add(i, Class::SB, false, d)?;
            }
            if self.is(i, Class::SB, false) && self.p.facts[i].zero_linking.is_empty() {
                let d = Self::derive(Rule::ZeroLinking, "no proper sublink has zero linking with its complement".into(), vec![self.fact(i, Class::SB, false)], BTreeSet::new());
                ch |= self.add(i, Class::B, false, d)?;
            }
            if let Ok(v) = fwm_obstruction(&self.p.facts[i].homfly, b.chi_s.hi.value) {
                if v.is_refuted() {
                    let ord = self.p.facts[i].homfly.ord_v().unwrap_or_default();
                    let detail = format!("ord_v P = {ord} < 1 − chi_s ≥ {}", 1 - b.chi_s.hi.value);
                    let d = Self::derive(Rule::Fwm, detail, vec![b.chi_s.hi.describe()], b.chi_s.hi.letters());
                    ch |= self.add(i, Class::Q, false, d)?;
                }
            }
        }
        for (x, y, reversed) in self.mirrors.clone() {
            for (a, b) in [(x, y), (y, x)] {
                if self.is(a, Class::Q, true) && self.p.facts[a].nontrivial {
                    let d = Self::derive(Rule::Mirror, format!("{} is nontrivial (HOMFLY)", self.name(a)), vec![self.fact(a, Class::Q, true)], BTreeSet::new());
                    ch |= self.add(b, Class::Q, false, d)?;
                }
                if !reversed {
                    continue;
                }
                let hi = self.bounds[a].chi_s.hi.clone();
                if hi.value > 0 {
                    continue;
                }
                let detail = format!("chi_s({}) ≤ {}", self.name(a), hi.value);
                if self.is(a, Class::SB, true) {
                    let d = Self::derive(Rule::MirrorObstruction, detail.clone(), vec![self.fact(a, Class::SB, true), hi.describe()], hi.letters());
                    ch |= self.add(b, Class::B, false, d)?;
                }
                if self.is(b, Class::B, true) {
                    let d = Self::derive(Rule::MirrorObstruction, detail, vec![self.fact(b, Class::B, true), hi.describe()], hi.letters());
                    ch |= self.add(a, Class::SB, false, d)?;
                }
            }
        }
        for (s, a, b, kind) in self.sums.clone() {
            for part in [a, b] {
                if self.is(part, Class::Q, false) {
                    let d = Self::derive(Rule::SumNotQ, format!("{} is a summand", self.name(part)), vec![self.fact(part, Class::Q, false)], BTreeSet::new());
                    ch |= self.add(s, Class::Q, false, d)?;
                }
            }
            for class in [Class::Q, Class::SB] {
                if self.is(a, class, true) && self.is(b, class, true) {
                    let d = Self::derive(Rule::SumClosure, format!("sum of {class} members"), vec![self.fact(a, class, true), self.fact(b, class, true)], BTreeSet::new());
                    ch |= self.add(s, class, true, d)?;
                }
            }
            let outer = |k: usize| self.p.kb.records[k].outer || self.is(k, Class::SB, true);
            if self.is(a, Class::B, true) && self.is(b, Class::B, true) && (kind == Sum::Split || (outer(a) && outer(b))) {
                let d = Self::derive(Rule::SumClosure, "sum of B members along outer components".into(), vec![self.fact(a, Class::B, true), self.fact(b, Class::B, true)], BTreeSet::new());
                ch |= self.add(s, Class::B, true, d)?;
            }
        }
        Ok(ch)
    }

    fn run(mut self) -> Result<VerdictLedger, ClassifyError> {
        loop {
            let mut ch = false;
            for i in 0..self.bounds.len() {
                ch |= self.local_bounds(i);
            }
            ch |= self.relational_bounds();
            self.check_intervals()?;
            ch |= self.membership()?;
            if !ch {
                break;
            }
        }
        Ok(VerdictLedger {
            names: self.p.kb.records.iter().map(|r| r.name.clone()).collect(),
            cells: self.cells,
            bounds: self.bounds,
        })
    }
}

/// Least fixpoint of the rule set over a prepared knowledge base.
pub fn apply_rules(p: &Prepared) -> Result<VerdictLedger, ClassifyError> {
    Engine::new(p)?.run()
}

/// χ intervals of a single record from its own braid and certificate.
pub fn chi_bounds_for(r: &LinkRecord, opts: &ClassifyOptions) -> Result<ChiBounds, ClassifyError> {
    let kb = KnowledgeBase {
        records: vec![LinkRecord { relations: Vec::new(), ..r.clone() }],
        ..Default::default()
    };
    let ledger = apply_rules(&prepare(&kb, opts)?)?;
    Ok(ledger.bounds[0].plain())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    pub class: Class,
    pub expected: ExpectedCell,
    pub verdict: Verdict,
    /// A derivation citing exactly the expected rule letters and at least
    /// the expected bound letters.
    pub matched: Option<Derivation>,
    pub ok: bool,
}

impl CellReport {
    pub fn from_axiom(&self) -> bool {
        self.matched.as_ref().map_or(false, |d| d.rule == Rule::Axiom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChiReport {
    pub stated: i64,
    pub interval: Interval,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReport {
    pub name: String,
    pub cells: Vec<CellReport>,
    pub chi_s: Option<ChiReport>,
    pub chi_s_minus: Option<ChiReport>,
}

impl RowReport {
    pub fn mismatches(&self) -> usize {
        self.cells.iter().filter(|c| !c.ok).count()
            + [self.chi_s, self.chi_s_minus].iter().flatten().filter(|c| !c.ok).count()
    }
}

/// A cell that stays unknown when one axiom is dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomNeed {
    pub link: String,
    pub class: Class,
    pub axiom: Axiom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Report {
    pub rows: Vec<RowReport>,
    pub needs_axiom: Vec<AxiomNeed>,
}

impl Table1Report {
    pub fn mismatches(&self) -> usize {
        self.rows.iter().map(|r| r.mismatches()).sum()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let _ = write!(out, "{:<14}", r.name);
            for c in &r.cells {
                let mark = if c.ok { "" } else { "!" };
                let tag = if c.from_axiom() { "*" } else { "" };
                let _ = write!(out, " {}={}{tag}{mark}", c.class, c.expected);
            }
            for (q, c) in [("chi_s", r.chi_s), ("chi_s-", r.chi_s_minus)] {
                if let Some(c) = c {
                    let mark = if c.ok { "" } else { "!" };
                    let _ = write!(out, " {q}={}{} {}", c.stated, mark, c.interval);
                }
            }
            out.push('\n');
            for c in r.cells.iter().filter(|c| !c.ok) {
                let _ = writeln!(out, "  mismatch {}: expected {}, derived {}", c.class, c.expected, c.verdict);
            }
        }
        if !self.needs_axiom.is_empty() {
            let _ = writeln!(out, "cells underivable without an axiom (* above):");
            for n in &self.needs_axiom {
                let _ = writeln!(out, "  {} {}: {}", n.link, n.class, n.axiom);
            }
        }
        let _ = writeln!(out, "{} rows, {} mismatches", self.rows.len(), self.mismatches());
        out
    }

    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "rows={}", self.rows.len());
        let _ = writeln!(out, "mismatches={}", self.mismatches());
        for r in &self.rows {
            for c in &r.cells {
                let _ = writeln!(out, "{}.{}={}", r.name, c.class, c.verdict);
                let _ = writeln!(out, "{}.{}.ok={}", r.name, c.class, c.ok);
                if let Some(d) = &c.matched {
                    let _ = writeln!(out, "{}.{}.trace={d}", r.name, c.class);
                }
            }
            for (q, c) in [("chi_s", r.chi_s), ("chi_s_minus", r.chi_s_minus)] {
                if let Some(c) = c {
                    let _ = writeln!(out, "{}.{q}={},{}", r.name, c.interval.lo, c.interval.hi);
                    let _ = writeln!(out, "{}.{q}.ok={}", r.name, c.ok);
                }
            }
        }
        for n in &self.needs_axiom {
            let _ = writeln!(out, "needs_axiom={} {} {}", n.link, n.class, n.axiom.citation);
        }
        out
    }
}

fn match_cell(expected: &ExpectedCell, cell: &CellVerdict) -> Option<Derivation> {
    let want = if expected.member { Verdict::Yes } else { Verdict::No };
    if cell.verdict != want {
        return None;
    }
    let rule: BTreeSet<char> = expected.letters.iter().filter(|c| RULE_LETTERS.contains(c)).copied().collect();
    let bound: BTreeSet<char> = expected.letters.iter().filter(|c| BOUND_LETTERS.contains(c)).copied().collect();
    cell.derivations
        .iter()
        .find(|d| d.letters == rule && bound.is_subset(&d.bound_letters))
        .cloned()
}

/// Compare a ledger with the transcribed rows. A membership cell matches
/// when the verdict agrees and some derivation cites the row's letters; a
/// stated χ_s must be the derived upper bound and a stated χ_s⁻ the derived
/// lower bound. Cells are also re-derived with each axiom dropped in turn.
pub fn table1_report(p: &Prepared, ledger: &VerdictLedger) -> Result<Table1Report, ClassifyError> {
    let mut rows = Vec::new();
    for row in &p.kb.rows {
        let i = ledger.position(&row.name).ok_or_else(|| ClassifyError::UnknownLink(row.name.clone()))?;
        let cells = Class::ALL
            .iter()
            .map(|&class| {
                let cell = &ledger.cells[i][class.index()];
                let matched = match_cell(&row.cells[class.index()], cell);
                CellReport {
                    class,
                    expected: row.cells[class.index()].clone(),
                    verdict: cell.verdict,
                    ok: matched.is_some(),
                    matched,
                }
            })
            .collect();
        let b = ledger.bounds[i].plain();
        let chi_s = row.chi_s.map(|x| ChiReport { stated: x, interval: b.chi_s, ok: b.chi_s.hi == x && b.chi_s.lo <= x });
        let chi_s_minus = row.chi_s_minus.map(|x| ChiReport {
            stated: x,
            interval: b.chi_s_minus,
            ok: b.chi_s_minus.lo == x && x <= b.chi_s_minus.hi,
        });
        rows.push(RowReport { name: row.name.clone(), cells, chi_s, chi_s_minus });
    }
    let mut needs_axiom = Vec::new();
    for (k, axiom) in p.kb.axioms.iter().enumerate() {
        let without = apply_rules(&p.without_axiom(k))?;
        for row in &p.kb.rows {
            for class in Class::ALL {
                if ledger.verdict(&row.name, class) != Verdict::Unknown
                    && without.verdict(&row.name, class) == Verdict::Unknown
                {
                    needs_axiom.push(AxiomNeed { link: row.name.clone(), class, axiom: axiom.clone() });
                }
            }
        }
    }
    Ok(Table1Report { rows, needs_axiom })
}

/// Bounds and verdicts of every record, keyed by name.
pub fn summary(ledger: &VerdictLedger) -> BTreeMap<String, (ChiBounds, [Verdict; 3])> {
    ledger
        .names
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let v = [0, 1, 2].map(|k| ledger.cells[i][k].verdict);
            (n.clone(), (ledger.bounds[i].plain(), v))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ledger(src: &str) -> VerdictLedger {
        let kb = KnowledgeBase::parse(src).unwrap();
        apply_rules(&prepare(&kb, &ClassifyOptions::default()).unwrap()).unwrap()
    }

    #[test]
    fn empty_kb_gives_empty_ledger() {
        let l = ledger("");
        assert!(l.names.is_empty());
        assert!(l.is_chain_consistent());
    }

    #[test]
    fn negative_hopf_link() {
        let l = ledger("link H BR[2,{1,1}]\nlink H* BR[2,{-1,-1}]\nmirror H* H\n");
        assert_eq!(l.verdict("H", Class::B), Verdict::Yes);
        let q = l.cell("H*", Class::Q).unwrap();
        assert_eq!(q.verdict, Verdict::No);
        assert!(q.derivations.iter().any(|d| d.rule == Rule::Mirror));
        let sb = l.cell("H*", Class::SB).unwrap();
        assert!(sb.derivations.iter().any(|d| d.rule == Rule::ChiGap));
        let b = l.cell("H*", Class::B).unwrap();
        assert!(b.derivations.iter().any(|d| d.rule == Rule::ZeroLinking));
        let chi = l.bounds("H*").unwrap().plain();
        assert_eq!(chi.chi_s, Interval { lo: 0, hi: 0 });
        assert_eq!(chi.chi_s_minus, Interval { lo: 2, hi: 2 });
        assert!(l.is_chain_consistent());
    }

    #[test]
    fn certificate_pins_both_intervals() {
        let r = LinkRecord {
            name: "T".into(),
            braid: BraidWord::new(2, vec![1, 1, 1]).unwrap(),
            qp_certificate: None,
            relations: vec![],
            outer: false,
        };
        let b = chi_bounds_for(&r, &ClassifyOptions::default()).unwrap();
        assert_eq!(b.chi_s, Interval { lo: -1, hi: -1 });
        assert_eq!(b.chi_s_minus, Interval { lo: -1, hi: -1 });
    }

    #[test]
    fn figure_eight_needs_the_determinant() {
        let r = LinkRecord {
            name: "4_1".into(),
            braid: BraidWord::new(3, vec![-1, 2, -1, 2]).unwrap(),
            qp_certificate: None,
            relations: vec![],
            outer: false,
        };
        let b = chi_bounds_for(&r, &ClassifyOptions::default()).unwrap();
        assert_eq!(b.chi_s, Interval { lo: -1, hi: -1 });
        assert_eq!(b.chi_s_minus, Interval { lo: 1, hi: 1 });
    }

    #[test]
    fn corrupted_certificate_is_rejected() {
        let kb = KnowledgeBase::parse("link X BR[3,{-1,2,1,1,2}]\ncert X [1]2 []1 []2\n").unwrap();
        assert_eq!(
            prepare(&kb, &ClassifyOptions::default()).unwrap_err(),
            ClassifyError::Certificate { name: "X".into() }
        );
        let kb = KnowledgeBase::parse("link X BR[3,{-1,2,1,1,2}]\ncert X [-1]2 []1 []2\n").unwrap();
        assert!(prepare(&kb, &ClassifyOptions::default()).is_ok());
    }

    #[test]
    fn wrong_relations_are_rejected() {
        let kb = KnowledgeBase::parse("link A BR[2,{1,1}]\nlink B BR[2,{1,1,1}]\nmirror B A\n").unwrap();
        assert!(matches!(prepare(&kb, &ClassifyOptions::default()), Err(ClassifyError::Relation { .. })));
        let kb = KnowledgeBase::parse("link A BR[2,{1,1}]\nlink S BR[3,{1,1,2,2}]\nsplit S A A\n").unwrap();
        assert!(matches!(prepare(&kb, &ClassifyOptions::default()), Err(ClassifyError::Relation { .. })));
    }

    #[test]
    fn contradictory_axiom_is_reported() {
        let kb = KnowledgeBase::parse("link H BR[2,{1,1}]\naxiom H B no h made up\n").unwrap();
        let err = apply_rules(&prepare(&kb, &ClassifyOptions::default()).unwrap()).unwrap_err();
        assert!(matches!(err, ClassifyError::Contradiction { .. }));
    }

    #[test]
    fn parse_errors_carry_lines() {
        let e = KnowledgeBase::parse("link A BR[2,{1}]\nmirror B A\n").unwrap_err();
        assert!(matches!(e, ClassifyError::Parse { line: 2, .. }));
        assert!(KnowledgeBase::parse("row A yes no maybe - -\n").is_err());
        assert_eq!(parse_cell("no(f,e)").unwrap().letters, BTreeSet::from(['e', 'f']));
        assert_eq!(parse_factor("[-1,2]1").unwrap(), QPFactor { conjugator: vec![-1, 2], generator: 1 });
    }
}

#[cfg(test)]
mod table_tests {
    use super::*;

    fn table() -> Prepared {
        let kb = KnowledgeBase::parse(include_str!("../../../fixtures/table1.kb")).unwrap();
        prepare(&kb, &ClassifyOptions::default()).unwrap()
    }

    #[test]
    fn table_reproduced() {
        let p = table();
        let l = apply_rules(&p).unwrap();
        let r = table1_report(&p, &l).unwrap();
        assert_eq!(r.mismatches(), 0, "{}\n{}", r.render_text(), l.render());
        assert_eq!(r.rows.len(), 29);
        assert!(l.is_chain_consistent());
    }

    #[test]
    fn dropping_the_split_axiom_leaves_one_cell_open() {
        let p = table();
        let h = p.kb.axioms.iter().position(|a| a.letter == Some('h')).unwrap();
        let l = apply_rules(&p.without_axiom(h)).unwrap();
        assert_eq!(l.verdict("3_1*⊔2_1", Class::B), Verdict::Unknown);
        assert_eq!(l.verdict("3_1*⊔2_1", Class::SB), Verdict::No);
        let r = table1_report(&p, &apply_rules(&p).unwrap()).unwrap();
        let needs: Vec<_> = r.needs_axiom.iter().filter(|n| n.axiom.letter == Some('h')).collect();
        assert_eq!(needs.len(), 1);
        assert_eq!((needs[0].link.as_str(), needs[0].class), ("3_1*⊔2_1", Class::B));
    }

    #[test]
    fn without_axioms_verdicts_only_shrink() {
        let p = table();
        let full = apply_rules(&p).unwrap();
        let mut bare = p.clone();
        bare.kb.axioms.clear();
        let l = apply_rules(&bare).unwrap();
        assert!(l.is_chain_consistent());
        for (i, cells) in l.cells.iter().enumerate() {
            for k in 0..3 {
                if cells[k].verdict != Verdict::Unknown {
                    assert_eq!(cells[k].verdict, full.cells[i][k].verdict);
                }
            }
        }
    }
}
