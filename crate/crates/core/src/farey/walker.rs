use super::{check_order, FareyError, Fraction};

/// Two consecutive elements `(γ_{i-1}, γ_i)` of the extended Farey sequence of
/// order `Q`.
///
/// Invariants: `curr.num * prev.den - prev.num * curr.den = 1`,
/// `prev.den + curr.den > Q`, and both denominators lie in `[1, Q]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FareyWalker {
    order: u64,
    prev: Fraction,
    curr: Fraction,
}

impl FareyWalker {
    /// Positioned at `(0/1, 1/Q)`, so `curr` is `γ_1`.
    pub fn new(order: u64) -> Result<Self, FareyError> {
        check_order(order)?;
        Ok(FareyWalker {
            order,
            prev: Fraction::zero(),
            curr: Fraction::raw(1, order),
        })
    }

    /// A walker on an explicit pair; fails unless the pair is consecutive in the
    /// extended sequence of this order.
    pub fn from_pair(order: u64, prev: Fraction, curr: Fraction) -> Result<Self, FareyError> {
        check_order(order)?;
        let det = i128::from(curr.num()) * i128::from(prev.den())
            - i128::from(prev.num()) * i128::from(curr.den());
        let dens_ok = prev.den() <= order
            && curr.den() <= order
            && u128::from(prev.den()) + u128::from(curr.den()) > u128::from(order);
        if det != 1 || !dens_ok {
            return Err(FareyError::NotConsecutive {
                q: prev.den(),
                q2: curr.den(),
                order,
            });
        }
        Ok(FareyWalker { order, prev, curr })
    }

    pub(crate) fn from_pair_unchecked(order: u64, prev: Fraction, curr: Fraction) -> Self {
        FareyWalker { order, prev, curr }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn prev(&self) -> Fraction {
        self.prev
    }

    pub fn curr(&self) -> Fraction {
        self.curr
    }

    /// `⌊(Q + q_{i-1}) / q_i⌋`, the multiplier that produces the next term.
    #[inline]
    fn multiplier(&self) -> u64 {
        (self.order + self.prev.den()) / self.curr.den()
    }

    /// The index `ν_Q(curr) = ⌊(Q + prev.den) / curr.den⌋`.
    #[inline]
    pub fn index(&self) -> u64 {
        self.multiplier()
    }

    /// Advances by one: `(prev, curr) <- (curr, next)` with
    /// `next = ⌊(Q + q_{i-1})/q_i⌋ · curr - prev` on numerators and denominators.
    #[inline]
    pub fn advance(&mut self) {
        let k = self.multiplier();
        let next = Fraction::raw(
            k * self.curr.num() - self.prev.num(),
            k * self.curr.den() - self.prev.den(),
        );
        self.prev = self.curr;
        self.curr = next;
    }

    /// Value-returning form of [`advance`](Self::advance).
    pub fn stepped(mut self) -> Self {
        self.advance();
        self
    }

    pub fn advance_by(&mut self, steps: u64) {
        for _ in 0..steps {
            self.advance();
        }
    }

    /// Forgets numerators.
    pub fn denominators(&self) -> DenominatorWalker {
        DenominatorWalker {
            order: self.order,
            prev: self.prev.den(),
            curr: self.curr.den(),
        }
    }
}

impl Iterator for FareyWalker {
    type Item = Fraction;

    /// Yields `curr` and then advances; never ends (the sequence is extended).
    fn next(&mut self) -> Option<Fraction> {
        let out = self.curr;
        self.advance();
        Some(out)
    }
}

/// Denominator-only walker: the index sequence depends on nothing else.
///
/// Its state is periodic with period `N(Q)`, starting from `(q_0, q_1) = (1, Q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DenominatorWalker {
    order: u64,
    prev: u64,
    curr: u64,
}

impl DenominatorWalker {
    pub fn new(order: u64) -> Result<Self, FareyError> {
        check_order(order)?;
        Ok(DenominatorWalker {
            order,
            prev: 1,
            curr: order,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn prev(&self) -> u64 {
        self.prev
    }

    pub fn curr(&self) -> u64 {
        self.curr
    }

    #[inline]
    pub fn index(&self) -> u64 {
        (self.order + self.prev) / self.curr
    }

    #[inline]
    pub fn advance(&mut self) {
        let next = self.index() * self.curr - self.prev;
        self.prev = self.curr;
        self.curr = next;
    }

    pub fn advance_by(&mut self, steps: u64) {
        for _ in 0..steps {
            self.advance();
        }
    }
}
