use alloc::vec::Vec;

use num_bigint::BigInt;
use once_cell::race::OnceBox;

use super::rational::ExactRational;
use crate::dd::Dd;

/// Entries kept in the process-wide table.
pub(crate) const CACHED: usize = 96;

/// Bernoulli numbers `B_0 ..= B_n` under the generating function
/// `y/(e^y − 1) = Σ B_n y^n/n!`, so `B_1 = −1/2`.
///
/// The other common convention (`B_1 = +1/2`) flips the sign of every
/// `g_p` that picks up `B_1`; nothing in this crate uses it.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliTable {
    values: Vec<ExactRational>,
}

impl BernoulliTable {
    /// Exact table up to and including `B_n_max`, from
    /// `Σ_{k=0}^{n} C(n+1, k) B_k = 0`.
    pub fn new(n_max: usize) -> Self {
        let mut values: Vec<ExactRational> = Vec::with_capacity(n_max + 1);
        values.push(ExactRational::one());
        // row holds C(n+1, k) for k = 0..=n+1.
        let mut row: Vec<BigInt> = alloc::vec![BigInt::from(1), BigInt::from(1)];
        for n in 1..=n_max {
            let mut next = Vec::with_capacity(row.len() + 1);
            next.push(BigInt::from(1));
            for w in row.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(BigInt::from(1));
            row = next;

            if n > 1 && n % 2 == 1 {
                values.push(ExactRational::zero());
                continue;
            }
            let mut acc = ExactRational::zero();
            for (k, b) in values.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc = acc + ExactRational::from_integer(row[k].clone()) * b.clone();
            }
            let scale = ExactRational::new(-1, (n + 1) as i64).expect("nonzero");
            values.push(acc * scale);
        }
        BernoulliTable { values }
    }

    pub fn get(&self, n: usize) -> Option<&ExactRational> {
        self.values.get(n)
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

pub(crate) struct Shared {
    pub exact: BernoulliTable,
    pub float: Vec<f64>,
    pub dd: Vec<Dd>,
}

pub(crate) fn shared() -> &'static Shared {
    static TABLE: OnceBox<Shared> = OnceBox::new();
    TABLE.get_or_init(|| {
        let exact = BernoulliTable::new(CACHED);
        let float = exact.values().iter().map(ExactRational::to_f64).collect();
        let dd = exact.values().iter().map(ExactRational::to_dd).collect();
        alloc::boxed::Box::new(Shared { exact, float, dd })
    })
}

/// `B_n`, exact.
pub fn bernoulli(n: usize) -> ExactRational {
    if n <= CACHED {
        shared().exact.values[n].clone()
    } else {
        BernoulliTable::new(n).values.swap_remove(n)
    }
}
