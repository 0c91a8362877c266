use super::FiniteGroup;
use crate::error::{Error, Result};

/// An element of `T^n`: one `T`-index per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerElement(pub Vec<usize>);

impl PowerElement {
    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    /// `x^(i)` with the convention that coordinate 0 is the identity;
    /// coordinates `1..=n` are 1-based.
    #[inline]
    pub fn component(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.0[i - 1]
        }
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl std::fmt::Display for PowerElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// The direct power `G = T × ... × T`.
///
/// Flat indices use mixed radix with coordinate 1 least significant, so the
/// identity is flat index 0.
#[derive(Clone, Debug)]
pub struct DirectPower {
    base: FiniteGroup,
    n: usize,
}

impl DirectPower {
    pub fn new(base: &FiniteGroup, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange { index: 0, order: 0 });
        }
        Ok(Self { base: base.clone(), n })
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|T|^n`, or `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        self.base.order().checked_pow(self.n as u32)
    }

    /// Validated element constructor.
    pub fn element(&self, coords: Vec<usize>) -> Result<PowerElement> {
        if coords.len() != self.n {
            return Err(Error::OutOfRange { index: coords.len(), order: self.n });
        }
        if let Some(&bad) = coords.iter().find(|&&c| c >= self.base.order()) {
            return Err(Error::OutOfRange { index: bad, order: self.base.order() });
        }
        Ok(PowerElement(coords))
    }

    pub fn identity(&self) -> PowerElement {
        PowerElement(vec![0; self.n])
    }

    pub fn mul(&self, x: &PowerElement, y: &PowerElement) -> PowerElement {
        PowerElement(x.0.iter().zip(&y.0).map(|(&a, &b)| self.base.mul(a, b)).collect())
    }

    pub fn inv(&self, x: &PowerElement) -> PowerElement {
        PowerElement(x.0.iter().map(|&a| self.base.inv(a)).collect())
    }

    pub fn element_order(&self, x: &PowerElement) -> usize {
        let mut k = 1;
        let mut y = x.clone();
        while !y.is_identity() {
            y = self.mul(&y, x);
            k += 1;
        }
        k
    }

    /// The element `t` placed in coordinate `i` (1-based), identity elsewhere.
    pub fn embed(&self, i: usize, t: usize) -> PowerElement {
        let mut coords = vec![0; self.n];
        coords[i - 1] = t;
        PowerElement(coords)
    }

    pub fn encode(&self, x: &PowerElement) -> usize {
        x.0.iter().rev().fold(0, |acc, &c| acc * self.base.order() + c)
    }

    pub fn decode(&self, mut flat: usize) -> PowerElement {
        let m = self.base.order();
        let mut coords = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            coords.push(flat % m);
            flat /= m;
        }
        PowerElement(coords)
    }

    /// All elements in flat-index order.
    pub fn elements(&self) -> impl Iterator<Item = PowerElement> + '_ {
        let total = self.order().expect("power order overflows usize");
        (0..total).map(move |i| self.decode(i))
    }

    /// Tabulates `T^n` as a [`FiniteGroup`] on flat indices.
    pub fn to_group(&self) -> Result<FiniteGroup> {
        let total = self
            .order()
            .filter(|&m| m <= 4096)
            .ok_or(Error::BudgetExceeded {
                what: "direct power table",
                needed: (self.base.order() as u128).pow(self.n as u32),
                budget: 4096,
            })?;
        let elems: Vec<PowerElement> = self.elements().collect();
        let mut mul = Vec::with_capacity(total * total);
        for x in &elems {
            for y in &elems {
                mul.push(self.encode(&self.mul(x, y)));
            }
        }
        let name = format!("{}^{}", self.base.name(), self.n);
        FiniteGroup::from_flat(name, total, mul)
    }
}
