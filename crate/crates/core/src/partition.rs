//! Partitioning the power set of `[k]` into stars of prescribed sizes.
//!
//! The construction is an induction on `k`. Given sizes summing to
//! `2^k - 1`, the odd sizes are paired up (one is left over), each pair and
//! each even size is halved, the leftover odd size `o` becomes `(o - 1) / 2`,
//! and the halved composition is solved over `[k - 1]`. Each star `A` of the
//! smaller solution is then doubled into `A ∪ A'` where `A' = {X ∪ {k}}`:
//! split into two odd stars for a pair, extended by `{k}` for the leftover,
//! or kept whole for an even size.
//!
//! Every intermediate star is re-checked with [`is_m_star`]; a failure is
//! reported as [`Error::Invariant`].

use std::fmt;

use crate::error::{Error, Result};
use crate::label::{Label, MAX_GROUND};
use crate::star::{is_m_star, StarSequence};

/// Block sizes `m1..mr` requested for a partition of the power set of `[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeComposition {
    pub sizes: Vec<usize>,
    pub k: u32,
}

impl SizeComposition {
    pub fn new(sizes: Vec<usize>, k: u32) -> Self {
        SizeComposition { sizes, k }
    }

    fn check_total(&self, with_empty: bool) -> Result<()> {
        if self.k > MAX_GROUND {
            return Err(Error::Composition(format!(
                "ground size {} exceeds {MAX_GROUND}",
                self.k
            )));
        }
        let total: u128 = self.sizes.iter().map(|&s| s as u128).sum();
        let want = (1u128 << self.k) - u128::from(!with_empty);
        if total != want {
            return Err(Error::Composition(format!(
                "sizes sum to {total}, expected {want} for k = {}",
                self.k
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SizeComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        write!(f, "k={} sizes={}", self.k, parts.join(","))
    }
}

/// Position in `A ∪ A'`, 1-based.
#[derive(Clone, Copy, Debug)]
enum Src {
    Orig(usize),
    Primed(usize),
    Singleton,
}

use Src::{Orig, Primed};

struct Doubling<'a> {
    sets: &'a [Label],
    k: u32,
}

impl<'a> Doubling<'a> {
    /// Validates that `a` is a star over a ground set below `k` avoiding `k`.
    fn new(a: &'a StarSequence, k: u32) -> Result<Self> {
        if k == 0 || k > MAX_GROUND {
            return Err(Error::Precondition(format!(
                "cannot double into ground size {k}"
            )));
        }
        if !is_m_star(a)? {
            return Err(Error::Precondition(format!("{a:?} is not a star")));
        }
        if let Some(g) = a.ground()? {
            if g > k {
                return Err(Error::Precondition(format!(
                    "star over [{g}] cannot be doubled into [{k}]"
                )));
            }
        }
        if a.iter().any(|l| l.contains(k)) {
            return Err(Error::Precondition(format!(
                "element {k} already present in {a:?}"
            )));
        }
        Ok(Doubling { sets: a, k })
    }

    fn m(&self) -> usize {
        self.sets.len()
    }

    fn get(&self, src: Src) -> Label {
        match src {
            Orig(j) => self.sets[j - 1].lift(self.k),
            Primed(j) => self.sets[j - 1].with(self.k),
            Src::Singleton => Label::singleton(self.k, self.k),
        }
    }

    fn build(&self, order: &[Src]) -> StarSequence {
        order
            .iter()
            .map(|&s| self.get(s))
            .collect::<Vec<_>>()
            .into()
    }
}

fn checked(star: StarSequence, len: usize, what: &str) -> Result<StarSequence> {
    if star.len() != len || !is_m_star(&star)? {
        return Err(Error::Invariant(format!(
            "{what} produced {star:?}, not a {len}-star"
        )));
    }
    Ok(star)
}

/// Orderings for the split of `A ∪ A'` when `m` is even and at least 6.
/// Odd `m` reuses this with `m + 1` and drops the last two entries of the
/// second star, which are the only ones referring to index `m + 1`.
fn split_order_even(m: usize, i: usize) -> (Vec<Src>, Vec<Src>) {
    let tail = [Primed(m), Orig(m)];
    if i == 3 {
        let first = vec![Primed(2), Primed(3), Orig(2)];
        let second = [Primed(1), Orig(1), Orig(3)]
            .into_iter()
            .chain((4..m).map(Primed))
            .chain((4..m).map(Orig))
            .chain(tail)
            .collect();
        (first, second)
    } else {
        let first = (1..=i).map(Orig).collect();
        let second = (1..m)
            .map(Primed)
            .chain((i + 1..m).map(Orig))
            .chain(tail)
            .collect();
        (first, second)
    }
}

fn split_order(m: usize, i: usize) -> (Vec<Src>, Vec<Src>) {
    match (m, i) {
        (1, 1) => (vec![Orig(1)], vec![Primed(1)]),
        (2, 1) => (vec![Orig(2)], vec![Primed(1), Primed(2), Orig(1)]),
        (3, 1) => (
            vec![Orig(1)],
            vec![Primed(1), Primed(2), Orig(2), Primed(3), Orig(3)],
        ),
        (3, 3) => (
            vec![Orig(1), Orig(2), Orig(3)],
            vec![Primed(1), Primed(2), Primed(3)],
        ),
        (4, 1) => (
            vec![Orig(1)],
            vec![
                Primed(1),
                Primed(2),
                Primed(3),
                Primed(4),
                Orig(4),
                Orig(2),
                Orig(3),
            ],
        ),
        (4, 3) => (
            vec![Primed(2), Primed(3), Orig(2)],
            vec![Primed(1), Orig(1), Orig(3), Primed(4), Orig(4)],
        ),
        _ if m.is_multiple_of(2) => split_order_even(m, i),
        _ => {
            let (first, mut second) = split_order_even(m + 1, i);
            second.truncate(second.len() - 2);
            (first, second)
        }
    }
}

/// Splits `A ∪ A'` into an `i`-star and a `(2m - i)`-star, `i` odd.
pub fn double_split(a: &StarSequence, i: usize, k: u32) -> Result<(StarSequence, StarSequence)> {
    let d = Doubling::new(a, k)?;
    let m = d.m();
    if i.is_multiple_of(2) || i > m {
        return Err(Error::Precondition(format!(
            "split size {i} must be odd and at most {m}"
        )));
    }
    let (first, second) = split_order(m, i);
    Ok((
        checked(d.build(&first), i, "double_split")?,
        checked(d.build(&second), 2 * m - i, "double_split")?,
    ))
}

fn extension_order(m: usize) -> Vec<Src> {
    match m {
        0 => vec![Src::Singleton],
        1 => vec![Primed(1), Orig(1), Src::Singleton],
        _ => {
            let mut order = vec![Primed(1), Orig(1), Orig(m)];
            for j in 2..m {
                order.push(Primed(j));
                order.push(Orig(j));
            }
            order.push(Primed(m));
            order.push(Src::Singleton);
            order
        }
    }
}

/// Orders `A ∪ A' ∪ {{k}}` as a `(2m + 1)`-star.
pub fn double_plus_singleton(a: &StarSequence, k: u32) -> Result<StarSequence> {
    let d = Doubling::new(a, k)?;
    let m = d.m();
    checked(
        d.build(&extension_order(m)),
        2 * m + 1,
        "double_plus_singleton",
    )
}

/// Orders `A ∪ A'` as a `2m`-star.
pub fn double(a: &StarSequence, k: u32) -> Result<StarSequence> {
    let d = Doubling::new(a, k)?;
    let m = d.m();
    let mut order = extension_order(m);
    order.pop();
    checked(d.build(&order), 2 * m, "double")
}

/// Partitions the nonempty subsets of `[k]` into stars whose lengths are
/// `comp.sizes`, returned in the same order.
pub fn partition(comp: &SizeComposition) -> Result<Vec<StarSequence>> {
    if comp.k == 0 {
        return Err(Error::Composition("ground size must be at least 1".into()));
    }
    comp.check_total(false)?;
    build(&comp.sizes, comp.k, false)
}

/// Partitions every subset of `[k]`, the empty set included, into stars of
/// the requested lengths.
pub fn partition_with_empty(comp: &SizeComposition) -> Result<Vec<StarSequence>> {
    comp.check_total(true)?;
    build(&comp.sizes, comp.k, true)
}

enum Role {
    /// Two odd sizes sharing one smaller star.
    Pair(usize, usize),
    /// The unpaired odd size, completed with `{k}`.
    Leftover(usize),
    Even(usize),
}

fn build(sizes: &[usize], k: u32, with_empty: bool) -> Result<Vec<StarSequence>> {
    if k == 0 {
        let mut out = vec![StarSequence::empty(); sizes.len()];
        if with_empty {
            let idx = sizes
                .iter()
                .position(|&s| s == 1)
                .ok_or_else(|| Error::Invariant("base case needs a block of size 1".into()))?;
            out[idx] = StarSequence::new(vec![Label::empty(0)]);
        }
        return Ok(out);
    }

    let odds: Vec<usize> = (0..sizes.len()).filter(|&j| sizes[j] % 2 == 1).collect();
    let evens = (0..sizes.len()).filter(|&j| sizes[j].is_multiple_of(2));
    let leftover_expected = !with_empty;
    if (odds.len() % 2 == 1) != leftover_expected {
        return Err(Error::Invariant(format!(
            "{} odd sizes at k = {k}",
            odds.len()
        )));
    }

    let mut roles = Vec::new();
    let mut child_sizes = Vec::new();
    let mut pairs = odds.chunks_exact(2);
    for p in pairs.by_ref() {
        roles.push(Role::Pair(p[0], p[1]));
        child_sizes.push((sizes[p[0]] + sizes[p[1]]) / 2);
    }
    if let [last] = pairs.remainder() {
        roles.push(Role::Leftover(*last));
        child_sizes.push((sizes[*last] - 1) / 2);
    }
    for j in evens {
        roles.push(Role::Even(j));
        child_sizes.push(sizes[j] / 2);
    }

    let children = build(&child_sizes, k - 1, with_empty)?;
    let mut out = vec![StarSequence::empty(); sizes.len()];
    for ((role, child), half) in roles.into_iter().zip(children).zip(child_sizes) {
        match role {
            Role::Pair(x, y) => {
                let i = sizes[x].min(sizes[y]);
                if i.is_multiple_of(2) || i > half {
                    return Err(Error::Invariant(format!(
                        "cannot split a {half}-star at {i}"
                    )));
                }
                let (small, large) = double_split(&child, i, k)?;
                if sizes[x] <= sizes[y] {
                    out[x] = small;
                    out[y] = large;
                } else {
                    out[y] = small;
                    out[x] = large;
                }
            }
            Role::Leftover(x) => out[x] = double_plus_singleton(&child, k)?,
            Role::Even(x) => out[x] = double(&child, k)?,
        }
    }
    Ok(out)
}
