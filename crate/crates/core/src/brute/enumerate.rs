//! Plain exhaustive enumerators: pairings, weak compositions, subsets,
//! permutations.

use crate::combinatorics::Pairing;

const UNPAIRED: usize = usize::MAX;

/// All pairings of `0..n` in a fixed order: the smallest unpaired element is
/// matched with each larger unpaired candidate in increasing order, then the
/// rest is filled recursively.
#[derive(Debug, Clone)]
pub struct PairingStream {
    partner: Vec<usize>,
    stack: Vec<(usize, usize)>,
    first_partner: Option<usize>,
    state: StreamState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum StreamState {
    Fresh,
    Running,
    Done,
}

impl PairingStream {
    pub fn new(n: usize) -> Self {
        PairingStream {
            partner: vec![UNPAIRED; n],
            stack: Vec::new(),
            first_partner: None,
            state: if n.is_multiple_of(2) { StreamState::Fresh } else { StreamState::Done },
        }
    }

    /// The sub-stream of pairings in which element `0` is matched with
    /// `first`. Streams for `first = 1..n` partition [`PairingStream::new`].
    pub fn with_first_partner(n: usize, first: usize) -> Self {
        let mut s = PairingStream::new(n);
        if first == 0 || first >= n {
            s.state = StreamState::Done;
        }
        s.first_partner = Some(first);
        s
    }

    /// Splits the stream at its first decision.
    pub fn partitions(n: usize) -> Vec<PairingStream> {
        if n == 0 {
            return vec![PairingStream::new(0)];
        }
        (1..n).map(|f| PairingStream::with_first_partner(n, f)).collect()
    }

    fn smallest_unpaired(&self) -> Option<usize> {
        self.partner.iter().position(|&p| p == UNPAIRED)
    }

    fn next_candidate(&self, a: usize, after: usize) -> Option<usize> {
        if a == 0 {
            if let Some(f) = self.first_partner {
                return (after < f && self.partner[f] == UNPAIRED).then_some(f);
            }
        }
        ((after + 1)..self.partner.len()).find(|&b| self.partner[b] == UNPAIRED)
    }

    fn link(&mut self, a: usize, b: usize) {
        self.partner[a] = b;
        self.partner[b] = a;
        self.stack.push((a, b));
    }

    /// Greedily completes the current partial pairing.
    fn fill(&mut self) -> bool {
        while let Some(a) = self.smallest_unpaired() {
            match self.next_candidate(a, a) {
                Some(b) => self.link(a, b),
                None => return false,
            }
        }
        true
    }

    /// Moves to the next complete pairing by revising the latest decision
    /// that still has an untried candidate.
    fn advance(&mut self) -> bool {
        while let Some((a, b)) = self.stack.pop() {
            self.partner[a] = UNPAIRED;
            self.partner[b] = UNPAIRED;
            if let Some(c) = self.next_candidate(a, b) {
                self.link(a, c);
                if self.fill() {
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for PairingStream {
    type Item = Pairing;

    fn next(&mut self) -> Option<Pairing> {
        let ok = match self.state {
            StreamState::Done => return None,
            StreamState::Fresh => {
                self.state = StreamState::Running;
                self.fill() || self.advance()
            }
            StreamState::Running => self.advance(),
        };
        if ok {
            Some(Pairing::from_partner_unchecked(self.partner.clone()))
        } else {
            self.state = StreamState::Done;
            None
        }
    }
}

/// All weak compositions of `total` into `parts` non-negative parts, in
/// lexicographic order.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 0..=total {
            cur.push(first);
            rec(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// All `r`-subsets of `0..n` as increasing vectors, in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < r - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r <= n {
        rec(0, n, r, &mut Vec::new(), &mut out);
    }
    out
}

/// Steps `perm` to its lexicographic successor; returns `false` (leaving the
/// slice sorted ascending) after the last permutation.
pub fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        perm.reverse();
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
