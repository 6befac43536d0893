//! Finite groups given by multiplication tables.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `table[x][y]` is the index of `x · y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl GroupTable {
    /// Checks closure, associativity, the identity and inverses exhaustively.
    pub fn new(order: usize, table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let bad = |m: String| Error::InvalidGroup(m);
        if order == 0 {
            return Err(bad("a group has at least one element".into()));
        }
        if table.len() != order || table.iter().any(|r| r.len() != order) {
            return Err(bad(format!("table must be {order}x{order}")));
        }
        if identity >= order {
            return Err(bad("identity out of range".into()));
        }
        if table.iter().flatten().any(|&z| z >= order) {
            return Err(bad("entry out of range".into()));
        }
        for x in 0..order {
            if table[identity][x] != x || table[x][identity] != x {
                return Err(bad(format!("{identity} is not an identity for {x}")));
            }
            if !(0..order).any(|y| table[x][y] == identity && table[y][x] == identity) {
                return Err(bad(format!("{x} has no inverse")));
            }
            for y in 0..order {
                for z in 0..order {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(bad(format!("associativity fails at ({x},{y},{z})")));
                    }
                }
            }
        }
        Ok(GroupTable { order, table, identity })
    }

    pub fn trivial() -> Self {
        GroupTable { order: 1, table: vec![vec![0]], identity: 0 }
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        let table = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
        GroupTable::new(n, table, 0)
    }

    /// Reads `{"order", "table", "identity"}` JSON.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read group `{}`: {e}", path.display())))?;
        let g: GroupTable =
            serde_json::from_str(&text).map_err(|e| Error::InvalidGroup(e.to_string()))?;
        GroupTable::new(g.order, g.table, g.identity)
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_associative_tables() {
        // a loop of order 3 with identity 0 that is not associative
        let t = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 2]];
        assert!(matches!(GroupTable::new(3, t, 0), Err(Error::InvalidGroup(_))));
        assert!(GroupTable::cyclic(4).is_ok());
    }
}
