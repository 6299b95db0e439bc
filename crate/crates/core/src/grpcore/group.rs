use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Element cap for groups read from files or built by constructors.
pub const ELEMENT_CAP: usize = 512;
/// Cap for groups built internally, such as outer automorphism groups.
pub const INTERNAL_CAP: usize = 4096;

/// A finite group given by its Cayley table. Element 0 is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    generators: Vec<usize>,
    name: String,
}

pub type GroupRef = Arc<FiniteGroup>;

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroup({}, order {}, generators {:?})",
            self.name, self.order, self.generators
        )
    }
}

impl FiniteGroup {
    /// Build and validate a group from its multiplication table (row-major).
    pub fn from_table(
        table: Vec<u32>,
        generators: Vec<usize>,
        name: impl Into<String>,
    ) -> Result<Self> {
        Self::from_table_with_cap(table, generators, name, ELEMENT_CAP)
    }

    pub fn from_table_with_cap(
        table: Vec<u32>,
        generators: Vec<usize>,
        name: impl Into<String>,
        cap: usize,
    ) -> Result<Self> {
        let n = (table.len() as f64).sqrt().round() as usize;
        if n * n != table.len() || n == 0 {
            return Err(Error::InvalidGroup(format!(
                "table of {} entries is not square",
                table.len()
            )));
        }
        if n > cap {
            return Err(Error::TooLarge { order: n, cap });
        }
        let g = Self::build(n, table, generators, name.into())?;
        g.validate()?;
        Ok(g)
    }

    /// Build without validation, for tables known to come from a group.
    pub(crate) fn from_table_unchecked(
        table: Vec<u32>,
        generators: Vec<usize>,
        name: impl Into<String>,
    ) -> Result<Self> {
        let n = (table.len() as f64).sqrt().round() as usize;
        Self::build(n, table, generators, name.into())
    }

    /// Re-validate after replacing the generators.
    pub(crate) fn with_generators(mut self, generators: Vec<usize>) -> Result<Self> {
        self.generators = generators;
        self.validate()?;
        Ok(self)
    }

    /// Table from a product function on `0..order`.
    pub fn from_fn(
        order: usize,
        mul: impl Fn(usize, usize) -> usize,
        generators: Vec<usize>,
        name: impl Into<String>,
        cap: usize,
    ) -> Result<Self> {
        if order > cap {
            return Err(Error::TooLarge { order, cap });
        }
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(mul(a, b) as u32);
            }
        }
        Self::from_table_with_cap(table, generators, name, cap)
    }

    fn build(n: usize, table: Vec<u32>, generators: Vec<usize>, name: String) -> Result<Self> {
        if let Some(&bad) = table.iter().find(|&&x| x as usize >= n) {
            return Err(Error::InvalidGroup(format!(
                "table entry {bad} out of range 0..{n}"
            )));
        }
        let mut inverses = vec![u32::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverses[a] = b as u32;
                    break;
                }
            }
        }
        if let Some(a) = inverses.iter().position(|&x| x == u32::MAX) {
            return Err(Error::InvalidGroup(format!("element {a} has no inverse")));
        }
        for &g in &generators {
            if g >= n {
                return Err(Error::InvalidGroup(format!("generator {g} out of range")));
            }
        }
        Ok(FiniteGroup {
            order: n,
            table,
            inverses,
            generators,
            name,
        })
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::InvalidGroup(format!(
                    "element 0 is not the identity (fails at {a})"
                )));
            }
        }
        let mut seen = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                let x = self.table[a * n + b] as usize;
                if seen[x] == (a as u32) + 1 {
                    return Err(Error::InvalidGroup(format!("row {a} repeats entry {x}")));
                }
                seen[x] = (a as u32) + 1;
            }
        }
        seen.fill(0);
        for b in 0..n {
            for a in 0..n {
                let x = self.table[a * n + b] as usize;
                if seen[x] == (b as u32) + 1 {
                    return Err(Error::InvalidGroup(format!("column {b} repeats entry {x}")));
                }
                seen[x] = (b as u32) + 1;
            }
        }
        // closure of the generators must be everything
        let span = self.closure(&self.generators);
        if span.len() != n {
            return Err(Error::InvalidGroup(format!(
                "generators span {} of {} elements",
                span.len(),
                n
            )));
        }
        // Light's test: associativity on a generating set suffices for a Latin square
        for &g in &self.generators {
            for x in 0..n {
                let xg = self.mul(x, g);
                for y in 0..n {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({x}, {g}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `x y x^-1 y^-1`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut r = 0;
        for _ in 0..k {
            r = self.mul(r, a);
        }
        r
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).map(|a| self.element_order(a)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| {
            self.generators
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    /// Whether the order is a power of `p`.
    pub fn is_p_group(&self, p: u32) -> bool {
        let mut n = self.order;
        while n % p as usize == 0 {
            n /= p as usize;
        }
        n == 1
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order;
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut out = vec![0usize];
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Conjugacy class sizes indexed by element.
    pub fn class_sizes(&self) -> Vec<usize> {
        let n = self.order;
        let mut size = vec![0; n];
        let mut done = vec![false; n];
        for x in 0..n {
            if done[x] {
                continue;
            }
            let cls = self.conjugacy_class(x);
            for &y in &cls {
                done[y] = true;
                size[y] = cls.len();
            }
        }
        size
    }

    pub fn conjugacy_class(&self, x: usize) -> Vec<usize> {
        let n = self.order;
        let mut seen = vec![false; n];
        seen[x] = true;
        let mut out = vec![x];
        let mut i = 0;
        while i < out.len() {
            let y = out[i];
            for &g in &self.generators {
                let z = self.conj(g, y);
                if !seen[z] {
                    seen[z] = true;
                    out.push(z);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Word-length BFS from the identity: for each element, a predecessor
    /// and the generator index reaching it (`x = pred * gen`).
    pub fn spanning_tree(&self) -> Vec<(usize, usize)> {
        let n = self.order;
        let mut tree = vec![(usize::MAX, usize::MAX); n];
        tree[0] = (0, usize::MAX);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (k, &g) in self.generators.iter().enumerate() {
                let y = self.mul(x, g);
                if tree[y].0 == usize::MAX {
                    tree[y] = (x, k);
                    queue.push_back(y);
                }
            }
        }
        tree
    }

    /// Elements in BFS order from the identity, with the tree above.
    pub fn bfs_order(&self) -> Vec<usize> {
        let n = self.order;
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in &self.generators {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Exponent `k` with `n = p^k`, if `n` is a power of `p`.
pub fn log_p(n: usize, p: u32) -> Option<usize> {
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        if m % p as usize != 0 {
            return None;
        }
        m /= p as usize;
        k += 1;
    }
    Some(k)
}

/// Largest divisor of `n` prime to `p`.
pub fn p_prime_part(n: usize, p: u32) -> usize {
    let mut m = n;
    while m % p as usize == 0 {
        m /= p as usize;
    }
    m
}
