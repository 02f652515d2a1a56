//! Complete deterministic automata over the signed alphabet of a free group.
//!
//! State 0 is the start state. Every state has exactly one successor per
//! letter. [`Dfa::canonical`] minimizes and renumbers states in breadth-first
//! order from the start, so two canonical automata are structurally equal iff
//! they recognize the same language.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Dfa {
    alphabet: usize,
    trans: Vec<usize>,
    accept: Vec<bool>,
}

impl Dfa {
    pub fn from_parts(alphabet: usize, trans: Vec<usize>, accept: Vec<bool>) -> Dfa {
        debug_assert_eq!(trans.len(), alphabet * accept.len());
        Dfa { alphabet, trans, accept }
    }

    pub fn state_count(&self) -> usize {
        self.accept.len()
    }

    pub fn next(&self, state: usize, letter: usize) -> usize {
        self.trans[state * self.alphabet + letter]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accept[state]
    }

    pub fn transitions(&self) -> &[usize] {
        &self.trans
    }

    /// Accepts nothing.
    pub fn empty(alphabet: usize) -> Dfa {
        Dfa { alphabet, trans: vec![0; alphabet], accept: vec![false] }
    }

    /// Accepts exactly the freely reduced words over `alphabet / 2` generators.
    ///
    /// State 0 has read nothing, state `1 + l` last read letter `l`, and the
    /// final state is a non-accepting sink.
    pub fn reduced_words(alphabet: usize) -> Dfa {
        let dead = alphabet + 1;
        let mut trans = Vec::with_capacity((alphabet + 2) * alphabet);
        for state in 0..=dead {
            for letter in 0..alphabet {
                let target = if state == dead || (state > 0 && (state - 1) ^ 1 == letter) { dead } else { letter + 1 };
                trans.push(target);
            }
        }
        let mut accept = vec![true; alphabet + 2];
        accept[dead] = false;
        Dfa { alphabet, trans, accept }
    }

    pub fn run(&self, letters: impl IntoIterator<Item = usize>) -> usize {
        letters.into_iter().fold(0, |s, l| self.next(s, l))
    }

    pub fn accepts(&self, letters: impl IntoIterator<Item = usize>) -> bool {
        self.accept[self.run(letters)]
    }

    pub fn complement(&self) -> Dfa {
        Dfa { alphabet: self.alphabet, trans: self.trans.clone(), accept: self.accept.iter().map(|a| !a).collect() }
    }

    /// Reachable part of the product automaton, accepting by `combine`.
    pub fn product(&self, other: &Dfa, combine: impl Fn(bool, bool) -> bool) -> Dfa {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut queue = VecDeque::new();
        let mut trans = Vec::new();
        let mut accept = Vec::new();
        index.insert((0, 0), 0);
        queue.push_back((0, 0));
        while let Some((p, q)) = queue.pop_front() {
            accept.push(combine(self.accept[p], other.accept[q]));
            for l in 0..self.alphabet {
                let pair = (self.next(p, l), other.next(q, l));
                let next_id = index.len();
                let id = *index.entry(pair).or_insert_with(|| {
                    queue.push_back(pair);
                    next_id
                });
                trans.push(id);
            }
        }
        Dfa { alphabet: self.alphabet, trans, accept }
    }

    /// Minimal automaton with breadth-first state numbering.
    pub fn canonical(&self) -> Dfa {
        let reachable = self.renumber_from_start(|s| s);
        reachable.minimize().renumber_from_start(|s| s)
    }

    // Breadth-first renumbering of the states reachable from the start, after
    // mapping states through `class` (identity or a congruence).
    fn renumber_from_start(&self, class: impl Fn(usize) -> usize) -> Dfa {
        let mut order: HashMap<usize, usize> = HashMap::new();
        let mut reps: Vec<usize> = Vec::new();
        let mut queue = VecDeque::new();
        order.insert(class(0), 0);
        reps.push(0);
        queue.push_back(0);
        let mut trans = Vec::new();
        while let Some(s) = queue.pop_front() {
            for l in 0..self.alphabet {
                let t = self.next(s, l);
                let c = class(t);
                let next_id = order.len();
                let id = *order.entry(c).or_insert_with(|| {
                    reps.push(t);
                    queue.push_back(t);
                    next_id
                });
                trans.push(id);
            }
        }
        let accept = reps.iter().map(|&s| self.accept[s]).collect();
        Dfa { alphabet: self.alphabet, trans, accept }
    }

    // Moore partition refinement; assumes every state is reachable.
    fn minimize(&self) -> Dfa {
        let n = self.state_count();
        let mut class: Vec<usize> = self.accept.iter().map(|&a| a as usize).collect();
        let mut count = class.iter().collect::<BTreeSet<_>>().len();
        loop {
            let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            let mut next_class = vec![0; n];
            for s in 0..n {
                let mut sig = Vec::with_capacity(self.alphabet + 1);
                sig.push(class[s]);
                sig.extend((0..self.alphabet).map(|l| class[self.next(s, l)]));
                let fresh = ids.len();
                next_class[s] = *ids.entry(sig).or_insert(fresh);
            }
            let new_count = ids.len();
            class = next_class;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        let class_ref = &class;
        self.renumber_from_start(|s| class_ref[s])
    }

    /// States from which some accepting state is reachable.
    pub fn live_states(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); n];
        for s in 0..n {
            for l in 0..self.alphabet {
                reverse[self.next(s, l)].push(s);
            }
        }
        let mut live = self.accept.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&s| live[s]).collect();
        while let Some(s) = stack.pop() {
            for &p in &reverse[s] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live
    }

    pub fn is_empty(&self) -> bool {
        self.shortest_accepted().is_none()
    }

    /// The shortest accepted word, least in letter order among those.
    pub fn shortest_accepted(&self) -> Option<Vec<usize>> {
        let n = self.state_count();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        while let Some(s) = queue.pop_front() {
            if self.accept[s] {
                let mut word = Vec::new();
                let mut cur = s;
                while let Some((p, l)) = parent[cur] {
                    word.push(l);
                    cur = p;
                }
                word.reverse();
                return Some(word);
            }
            for l in 0..self.alphabet {
                let t = self.next(s, l);
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((s, l));
                    queue.push_back(t);
                }
            }
        }
        None
    }
}

/// Nondeterministic automaton with epsilon moves, used to build languages
/// that are not boolean combinations of cones.
#[derive(Clone, Debug, Default)]
pub(crate) struct Nfa {
    moves: Vec<Vec<(usize, usize)>>,
    epsilon: Vec<Vec<usize>>,
    accept: Vec<bool>,
}

impl Nfa {
    pub fn new() -> Nfa {
        let mut n = Nfa::default();
        n.add_state(false);
        n
    }

    pub fn add_state(&mut self, accepting: bool) -> usize {
        self.moves.push(Vec::new());
        self.epsilon.push(Vec::new());
        self.accept.push(accepting);
        self.accept.len() - 1
    }

    pub fn set_accepting(&mut self, state: usize) {
        self.accept[state] = true;
    }

    pub fn add_move(&mut self, from: usize, letter: usize, to: usize) {
        self.moves[from].push((letter, to));
    }

    pub fn add_epsilon(&mut self, from: usize, to: usize) {
        self.epsilon[from].push(to);
    }

    /// Appends a path spelling `letters` from `from`; returns its end state.
    pub fn add_path(&mut self, from: usize, letters: &[usize]) -> usize {
        let mut cur = from;
        for &l in letters {
            let next = self.add_state(false);
            self.add_move(cur, l, next);
            cur = next;
        }
        cur
    }

    fn closure(&self, states: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        let mut stack: Vec<usize> = states.into_iter().collect();
        while let Some(s) = stack.pop() {
            if set.insert(s) {
                stack.extend(self.epsilon[s].iter().copied());
            }
        }
        set
    }

    /// Subset construction; the empty subset becomes the sink.
    pub fn determinize(&self, alphabet: usize) -> Dfa {
        let start = self.closure([0]);
        let mut index: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        let mut subsets = vec![start.clone()];
        index.insert(start, 0);
        let mut trans = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            let current = subsets[i].clone();
            for l in 0..alphabet {
                let targets =
                    current.iter().flat_map(|&s| self.moves[s].iter().filter(|(m, _)| *m == l).map(|&(_, t)| t));
                let next = self.closure(targets.collect::<Vec<_>>());
                let fresh = subsets.len();
                let id = *index.entry(next.clone()).or_insert_with(|| {
                    subsets.push(next);
                    fresh
                });
                trans.push(id);
            }
            i += 1;
        }
        let accept = subsets.iter().map(|s| s.iter().any(|&q| self.accept[q])).collect();
        Dfa { alphabet, trans, accept }
    }
}
