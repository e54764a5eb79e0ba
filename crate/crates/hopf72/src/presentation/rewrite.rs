//! Rewriting over `k^G` coefficients and completion of the relator set.

use num::{One, Zero};
use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};

use super::{SmashPoly, Word};
use crate::scalar::Q;
use crate::symgroup::SymGroup;
use crate::Error;

/// Graded order on words. Inside one degree, words outside the preferred
/// set are larger; ties break left-lex by letter rank.
#[derive(Clone, Debug)]
pub struct WordOrder {
    pub rank: Vec<u8>,
    pub preferred: Option<BTreeSet<Word>>,
}

impl WordOrder {
    pub fn deglex(rank: Vec<u8>) -> Self {
        WordOrder { rank, preferred: None }
    }

    pub fn with_preferred(rank: Vec<u8>, preferred: BTreeSet<Word>) -> Self {
        WordOrder { rank, preferred: Some(preferred) }
    }

    fn is_preferred(&self, w: &[u8]) -> bool {
        self.preferred.as_ref().map_or(false, |p| p.contains(w))
    }

    pub fn cmp(&self, u: &[u8], v: &[u8]) -> Ordering {
        u.len()
            .cmp(&v.len())
            .then_with(|| (!self.is_preferred(u)).cmp(&!self.is_preferred(v)))
            .then_with(|| {
                let ru: Vec<u8> = u.iter().map(|&l| self.rank[l as usize]).collect();
                let rv: Vec<u8> = v.iter().map(|&l| self.rank[l as usize]).collect();
                ru.cmp(&rv)
            })
    }

    pub fn leading<'a>(&self, p: &'a SmashPoly) -> Option<(&'a Word, &'a Vec<Q>)> {
        p.terms.iter().max_by(|a, b| self.cmp(a.0, b.0))
    }
}

/// `lhs → rhs`.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: SmashPoly,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    pub grp: SymGroup,
    pub rules: Vec<Rule>,
    pub order: WordOrder,
    /// True when every overlap was resolved within the degree bound.
    pub complete: bool,
    pub skipped_overlaps: usize,
    pub rounds: usize,
    memo: RefCell<HashMap<Word, SmashPoly>>,
}

impl RewriteSystem {
    pub fn new(grp: SymGroup, order: WordOrder) -> Self {
        RewriteSystem {
            grp,
            rules: vec![],
            order,
            complete: false,
            skipped_overlaps: 0,
            rounds: 0,
            memo: RefCell::new(HashMap::new()),
        }
    }

    fn find_redex(&self, w: &[u8]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for (ri, r) in self.rules.iter().enumerate() {
                if w[pos..].starts_with(&r.lhs) {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    pub fn is_reducible(&self, w: &[u8]) -> bool {
        self.find_redex(w).is_some()
    }

    /// Normal form of a single word, leftmost-first strategy.
    pub fn nf_word(&self, w: &[u8]) -> Result<SmashPoly, Error> {
        let mut stack = HashSet::new();
        self.nf_word_inner(w, &mut stack)
    }

    fn nf_word_inner(&self, w: &[u8], stack: &mut HashSet<Word>) -> Result<SmashPoly, Error> {
        if let Some(p) = self.memo.borrow().get(w) {
            return Ok(p.clone());
        }
        let out = match self.find_redex(w) {
            None => SmashPoly::word(&self.grp, w.to_vec(), Q::one()),
            Some((pos, ri)) => {
                if !stack.insert(w.to_vec()) {
                    return Err(Error::Completion(format!(
                        "rewriting cycles through {}",
                        super::word_name(&self.grp, w)
                    )));
                }
                let r = &self.rules[ri];
                let stepped = r
                    .rhs
                    .mul_word_left(&w[..pos])
                    .mul_word_right(&self.grp, &w[pos + r.lhs.len()..]);
                let res = self.nf_inner(&stepped, stack)?;
                stack.remove(w);
                res
            }
        };
        self.memo.borrow_mut().insert(w.to_vec(), out.clone());
        Ok(out)
    }

    fn nf_inner(&self, p: &SmashPoly, stack: &mut HashSet<Word>) -> Result<SmashPoly, Error> {
        let mut out = SmashPoly::zero();
        for (w, phi) in &p.terms {
            out.add(&self.nf_word_inner(w, stack)?.mul_fn_right(phi));
        }
        Ok(out)
    }

    pub fn nf(&self, p: &SmashPoly) -> Result<SmashPoly, Error> {
        let mut stack = HashSet::new();
        self.nf_inner(p, &mut stack)
    }

    fn clear_memo(&self) {
        self.memo.borrow_mut().clear();
    }

    /// Orients a reduced nonzero relation into a rule.
    fn orient(&self, r: &SmashPoly) -> Result<Rule, Error> {
        let (lead, phi) = self.order.leading(r).expect("nonzero");
        if self.order.is_preferred(lead) {
            return Err(Error::Completion(format!(
                "relation among normal words: {} = 0",
                r.render(&self.grp)
            )));
        }
        if phi.iter().any(|c| c.is_zero()) {
            return Err(Error::Completion(format!(
                "leading coefficient of {} is not invertible in k^G",
                r.render(&self.grp)
            )));
        }
        let inv: Vec<Q> = phi.iter().map(|c| -c.recip()).collect();
        let mut rest = r.clone();
        rest.terms.remove(lead);
        Ok(Rule { lhs: lead.clone(), rhs: rest.mul_fn_right(&inv) })
    }

    fn add_relation(&mut self, p: &SmashPoly, pending: &mut Vec<SmashPoly>) -> Result<bool, Error> {
        let r = self.nf(p)?;
        if r.is_zero() {
            return Ok(false);
        }
        let rule = self.orient(&r)?;
        let mut kept = Vec::new();
        for old in self.rules.drain(..) {
            if old.lhs.windows(rule.lhs.len()).any(|s| s == rule.lhs.as_slice()) {
                let mut rel = SmashPoly::word(&self.grp, old.lhs.clone(), Q::one());
                rel.sub(&old.rhs);
                pending.push(rel);
            } else {
                kept.push(old);
            }
        }
        kept.push(rule);
        self.rules = kept;
        self.clear_memo();
        Ok(true)
    }

    /// Overlap ambiguities `l1 = u s`, `l2 = s v`; returns the differences
    /// of the two reductions of `u s v` and the number of overlaps skipped.
    fn critical_pairs(&self, degree_bound: usize) -> Result<(Vec<SmashPoly>, usize), Error> {
        let mut out = Vec::new();
        let mut skipped = 0;
        for r1 in &self.rules {
            for r2 in &self.rules {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] {
                        continue;
                    }
                    if l1.len() + l2.len() - k > degree_bound {
                        skipped += 1;
                        continue;
                    }
                    let route1 = r1.rhs.mul_word_right(&self.grp, &l2[k..]);
                    let route2 = r2.rhs.mul_word_left(&l1[..l1.len() - k]);
                    let mut d = self.nf(&route1)?;
                    d.sub(&self.nf(&route2)?);
                    if !d.is_zero() {
                        out.push(d);
                    }
                }
            }
        }
        Ok((out, skipped))
    }

    /// Completes `relators` with respect to `order`, resolving overlaps of
    /// total degree at most `degree_bound`.
    pub fn complete(
        grp: SymGroup,
        relators: &[SmashPoly],
        order: WordOrder,
        degree_bound: usize,
    ) -> Result<RewriteSystem, Error> {
        let mut sys = RewriteSystem::new(grp, order);
        let mut pending: Vec<SmashPoly> = relators.iter().rev().cloned().collect();
        for round in 1..=64 {
            while let Some(p) = pending.pop() {
                sys.add_relation(&p, &mut pending)?;
            }
            let (diffs, skipped) = sys.critical_pairs(degree_bound)?;
            sys.rounds = round;
            if diffs.is_empty() {
                sys.skipped_overlaps = skipped;
                sys.complete = skipped == 0;
                sys.normalize_rhs()?;
                return Ok(sys);
            }
            pending = diffs.into_iter().rev().collect();
        }
        Err(Error::Completion("completion did not stabilise within 64 rounds".into()))
    }

    fn normalize_rhs(&mut self) -> Result<(), Error> {
        let new: Vec<SmashPoly> = self.rules.iter().map(|r| self.nf(&r.rhs)).collect::<Result<_, _>>()?;
        for (r, n) in self.rules.iter_mut().zip(new) {
            r.rhs = n;
        }
        let order = self.order.clone();
        self.rules.sort_by(|a, b| order.cmp(&a.lhs, &b.lhs));
        self.clear_memo();
        Ok(())
    }

    /// All words of degree at most `max_degree`.
    pub fn all_words(n_letters: usize, max_degree: usize) -> Vec<Word> {
        let mut out = vec![vec![]];
        let mut layer: Vec<Word> = vec![vec![]];
        for _ in 0..max_degree {
            let mut next = Vec::new();
            for w in &layer {
                for l in 0..n_letters as u8 {
                    let mut x = w.clone();
                    x.push(l);
                    next.push(x);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Irreducible words up to `max_degree`, grown letter by letter.
    pub fn irreducible_words(&self, max_degree: usize) -> Vec<Word> {
        let n = self.grp.transpositions().len() as u8;
        let mut out = vec![vec![]];
        let mut layer: Vec<Word> = vec![vec![]];
        for _ in 0..max_degree {
            let mut next = Vec::new();
            for w in &layer {
                for l in 0..n {
                    let mut x = w.clone();
                    x.push(l);
                    if !self.rules.iter().any(|r| x.ends_with(&r.lhs)) {
                        next.push(x);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Checks that no single rewrite step raises degree and that the
    /// one-step reduction graph on words of degree at most `max_degree` is
    /// acyclic. Returns the number of words examined.
    pub fn check_termination(&self, max_degree: usize) -> Result<usize, Error> {
        for r in &self.rules {
            if r.rhs.degree().unwrap_or(0) > r.lhs.len() {
                return Err(Error::Verification(format!(
                    "rule for {} raises degree",
                    super::word_name(&self.grp, &r.lhs)
                )));
            }
        }
        let n = self.grp.transpositions().len();
        let words = Self::all_words(n, max_degree);
        let succ = |w: &Word| -> Vec<Word> {
            let mut s = BTreeSet::new();
            for pos in 0..w.len() {
                for r in &self.rules {
                    if w[pos..].starts_with(&r.lhs) {
                        let st = r.rhs.mul_word_left(&w[..pos]);
                        for x in st.terms.keys() {
                            let mut y = x.clone();
                            y.extend_from_slice(&w[pos + r.lhs.len()..]);
                            s.insert(y);
                        }
                    }
                }
            }
            s.into_iter().collect()
        };
        // 0 unvisited, 1 on stack, 2 done
        let mut color: HashMap<Word, u8> = HashMap::new();
        for start in &words {
            if color.contains_key(start) {
                continue;
            }
            let mut stack: Vec<(Word, Vec<Word>, usize)> = vec![(start.clone(), succ(start), 0)];
            color.insert(start.clone(), 1);
            while let Some(top) = stack.last_mut() {
                if top.2 < top.1.len() {
                    let nxt = top.1[top.2].clone();
                    top.2 += 1;
                    match color.get(&nxt) {
                        Some(1) => {
                            return Err(Error::Verification(format!(
                                "reduction cycle through {}",
                                super::word_name(&self.grp, &nxt)
                            )))
                        }
                        Some(_) => {}
                        None => {
                            color.insert(nxt.clone(), 1);
                            let s = succ(&nxt);
                            stack.push((nxt, s, 0));
                        }
                    }
                } else {
                    color.insert(top.0.clone(), 2);
                    stack.pop();
                }
            }
        }
        Ok(words.len())
    }

    pub fn render_rules(&self) -> Vec<String> {
        self.rules
            .iter()
            .map(|r| format!("{} -> {}", super::word_name(&self.grp, &r.lhs), r.rhs.render(&self.grp)))
            .collect()
    }
}
