//! Isomorphism testing between small finite groups given by tables.

use super::AbstractGroup;

/// Largest order accepted by [`are_isomorphic`].
pub const ISO_ORDER_CAP: usize = 10_000;

/// A bijection `map[a] = φ(a)` from the elements of one group to another
/// that respects the composition tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub map: Vec<usize>,
}

impl Isomorphism {
    /// Re-checks bijectivity and `φ(ab) = φ(a)φ(b)` on every pair; returns
    /// the first offending pair otherwise.
    pub fn verify(&self, a: &AbstractGroup, b: &AbstractGroup) -> Result<(), (usize, usize)> {
        let m = a.order();
        if self.map.len() != m || b.order() != m {
            return Err((0, 0));
        }
        let mut hit = vec![false; m];
        for &x in &self.map {
            if x >= m || hit[x] {
                return Err((0, 0));
            }
            hit[x] = true;
        }
        for x in 0..m {
            for y in 0..m {
                if self.map[a.mul(x, y)] != b.mul(self.map[x], self.map[y]) {
                    return Err((x, y));
                }
            }
        }
        Ok(())
    }
}

/// Greedy generating set: walk elements in index order, keep those not yet
/// in the subgroup generated so far.
fn generating_set(g: &AbstractGroup) -> Vec<usize> {
    let m = g.order();
    let mut inside = vec![false; m];
    inside[g.identity()] = true;
    let mut gens = Vec::new();
    // prefer elements of large order: fewer generators, smaller search
    let mut candidates: Vec<usize> = (0..m).collect();
    candidates.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
    for x in candidates {
        if inside[x] {
            continue;
        }
        gens.push(x);
        inside = vec![false; m];
        inside[g.identity()] = true;
        let mut members = vec![g.identity()];
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            i += 1;
            for &s in &gens {
                let b = g.mul(a, s);
                if !inside[b] {
                    inside[b] = true;
                    members.push(b);
                }
            }
        }
        if members.len() == m {
            break;
        }
    }
    gens
}

/// Tries to extend `gens ↦ imgs` to an injective homomorphism by walking
/// the right Cayley graph of `a`.
fn extend(a: &AbstractGroup, b: &AbstractGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let m = a.order();
    let mut map = vec![usize::MAX; m];
    let mut used = vec![false; m];
    map[a.identity()] = b.identity();
    used[b.identity()] = true;
    let mut queue = vec![a.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = a.mul(x, s);
            let fy = b.mul(map[x], t);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                map[y] = fy;
                used[fy] = true;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    (queue.len() == m).then_some(map)
}

/// Decides `A ≅ B`, returning a verified witness when they are.
///
/// Orders and element-order multisets are compared first; then images of a
/// generating set of `A` are searched among elements of `B` of matching
/// order.
pub fn are_isomorphic(a: &AbstractGroup, b: &AbstractGroup) -> Result<Option<Isomorphism>, usize> {
    let m = a.order();
    if m > ISO_ORDER_CAP || b.order() > ISO_ORDER_CAP {
        return Err(m.max(b.order()));
    }
    if m != b.order() || a.order_statistics() != b.order_statistics() {
        return Ok(None);
    }
    let gens = generating_set(a);
    let gen_orders: Vec<usize> = gens.iter().map(|&g| a.element_order(g)).collect();
    let b_orders: Vec<usize> = (0..m).map(|x| b.element_order(x)).collect();
    let pools: Vec<Vec<usize>> = gen_orders
        .iter()
        .map(|&o| (0..m).filter(|&x| b_orders[x] == o).collect())
        .collect();

    let mut choice = vec![0usize; gens.len()];
    loop {
        if !pools.iter().any(|p| p.is_empty()) {
            let imgs: Vec<usize> = choice.iter().zip(&pools).map(|(&c, p)| p[c]).collect();
            if let Some(map) = extend(a, b, &gens, &imgs) {
                let iso = Isomorphism { map };
                debug_assert!(iso.verify(a, b).is_ok());
                return Ok(Some(iso));
            }
        } else {
            return Ok(None);
        }
        // odometer over the candidate pools
        let mut k = gens.len();
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < pools[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}
