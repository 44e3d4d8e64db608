//! Hook lengths, excited diagrams and the Naruse hook-length formula.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{to_u128, Rational};
use crate::shapes::{contains, Cell, CellSet, Partition};

/// Hook length of every cell of a straight shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookTable {
    hooks: BTreeMap<Cell, usize>,
}

impl HookTable {
    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.hooks.get(&cell).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.hooks.iter().map(|(c, h)| (*c, *h))
    }

    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }
}

/// `h(i, j) = nu_i - j + nu'_j - i + 1`.
pub fn hooks(nu: &Partition) -> HookTable {
    let conj = nu.conjugate();
    let hooks = nu
        .diagram()
        .into_iter()
        .map(|(i, j)| ((i, j), nu.part(i) - j + conj.part(j) - i + 1))
        .collect();
    HookTable { hooks }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExcitedDiagram {
    pub cells: CellSet,
}

/// All diagrams reachable from `[lambda]` by excited moves inside `[nu]`.
///
/// A move takes a cell `(i, j)` of the diagram to `(i+1, j+1)` when that cell
/// lies in `[nu]` and none of `(i, j+1)`, `(i+1, j)`, `(i+1, j+1)` is occupied.
pub fn excited_diagrams(nu: &Partition, lambda: &Partition) -> Result<Vec<ExcitedDiagram>> {
    if !contains(lambda, nu) {
        return Err(Error::NotContained { inner: lambda.parts().to_vec(), outer: nu.parts().to_vec() });
    }
    let inside = |(i, j): Cell| j <= nu.part(i);
    let start = lambda.diagram();
    let mut seen: BTreeSet<CellSet> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(diagram) = queue.pop_front() {
        for &(i, j) in &diagram {
            let target = (i + 1, j + 1);
            if !inside(target)
                || diagram.contains(&(i, j + 1))
                || diagram.contains(&(i + 1, j))
                || diagram.contains(&target)
            {
                continue;
            }
            let mut next = diagram.clone();
            next.remove(&(i, j));
            next.insert(target);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().map(|cells| ExcitedDiagram { cells }).collect())
}

/// The Naruse sum `|nu/lambda|! * sum_D prod_{u in [nu] \ D} 1/h(u)` as an
/// exact rational.
pub fn naruse_sum(nu: &Partition, lambda: &Partition) -> Result<Rational> {
    let diagrams = excited_diagrams(nu, lambda)?;
    let table = hooks(nu);
    let mut sum = Rational::zero();
    for d in &diagrams {
        let denom: BigInt = table.iter().filter(|(c, _)| !d.cells.contains(c)).map(|(_, h)| BigInt::from(h)).product();
        sum += Rational::new(BigInt::one(), denom);
    }
    let size = nu.size() - lambda.size();
    let factorial: BigInt = (1..=size).map(BigInt::from).product();
    Ok(sum * Rational::from_integer(factorial))
}

/// Number of standard Young tableaux of shape `nu/lambda` from the Naruse
/// formula. Fails with [`Error::NotIntegral`] if the sum is not an integer.
pub fn naruse_count(nu: &Partition, lambda: &Partition) -> Result<u128> {
    to_u128(&naruse_sum(nu, lambda)?)
}
