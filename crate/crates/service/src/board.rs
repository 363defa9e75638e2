//! Game positions as seen over the wire.

use serde_json::{json, Value};
use ungar::engine::{engine_move, winning_moves, Game, LatticeGame, SkewGame, TamariGame, WeakGame};
use ungar::lattice::{FiniteLattice, LatticeError, LatticeFile};
use ungar::tamari::Perm312;
use ungar::weak::Permutation;
use ungar::young::Partition;

pub const MAX_SKEW_STATES: u128 = 250_000;
pub const MAX_TAMARI_N: usize = 10;
pub const MAX_WEAK_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamError {
    Invalid(String),
    TooLarge(String),
}

impl std::fmt::Display for ParamError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParamError::Invalid(m) | ParamError::TooLarge(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for ParamError {}

fn invalid(msg: impl Into<String>) -> ParamError {
    ParamError::Invalid(msg.into())
}

/// The submitted move is not among the legal moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IllegalMove;

pub enum Board {
    Skew { game: SkewGame, lam: Partition },
    Tamari { game: TamariGame, w: Perm312 },
    Weak { game: WeakGame, w: Permutation },
    Lattice { game: LatticeGame, x: usize },
}

fn usize_array(v: &Value, field: &str) -> Result<Vec<usize>, ParamError> {
    let arr = v
        .as_array()
        .ok_or_else(|| invalid(format!("`{field}` must be an array")))?;
    arr.iter()
        .map(|x| {
            x.as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| invalid(format!("`{field}` must hold non-negative integers")))
        })
        .collect()
}

fn size_param(params: &Value) -> Result<usize, ParamError> {
    let n = params
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| invalid("`n` must be a positive integer"))?;
    if n == 0 {
        return Err(invalid("`n` must be a positive integer"));
    }
    Ok(n as usize)
}

/// Number of partitions `nu` with `mu ⊆ nu ⊆ lam`, saturating.
pub fn count_between(mu: &Partition, lam: &Partition) -> u128 {
    let rows = lam.len();
    let width = lam.row(1);
    // ways[v] = fillings of the rows so far whose last row has length v.
    let mut ways = vec![0u128; width + 1];
    ways[width] = 1;
    for r in 1..=rows {
        let (lo, hi) = (mu.row(r), lam.row(r));
        let mut next = vec![0u128; width + 1];
        let mut acc = 0u128;
        for v in (0..=width).rev() {
            acc = acc.saturating_add(ways[v]);
            if (lo..=hi).contains(&v) {
                next[v] = acc;
            }
        }
        ways = next;
    }
    ways.iter().fold(0u128, |a, &b| a.saturating_add(b))
}

impl Board {
    /// Builds the start position (the top element) for a family.
    pub fn create(family: &str, params: &Value) -> Result<Board, ParamError> {
        match family {
            "skew" => {
                let lam = params.get("lam").ok_or_else(|| invalid("`lam` is required"))?;
                let lam = Partition::new(usize_array(lam, "lam")?).map_err(|e| invalid(e.to_string()))?;
                let mu = match params.get("mu") {
                    Some(m) => Partition::new(usize_array(m, "mu")?).map_err(|e| invalid(e.to_string()))?,
                    None => Partition::empty(),
                };
                if !lam.contains(&mu) {
                    return Err(invalid(format!("mu {mu} is not contained in lam {lam}")));
                }
                let states = count_between(&mu, &lam);
                if states > MAX_SKEW_STATES {
                    return Err(ParamError::TooLarge(format!(
                        "{states} positions exceed the limit of {MAX_SKEW_STATES}"
                    )));
                }
                Ok(Board::Skew {
                    game: SkewGame::new(mu),
                    lam,
                })
            }
            "tamari" => {
                let n = size_param(params)?;
                if n > MAX_TAMARI_N {
                    return Err(ParamError::TooLarge(format!(
                        "n = {n} exceeds the limit of {MAX_TAMARI_N}"
                    )));
                }
                Ok(Board::Tamari {
                    game: TamariGame::new(),
                    w: Perm312::top(n),
                })
            }
            "weak" => {
                let n = size_param(params)?;
                if n > MAX_WEAK_N {
                    return Err(ParamError::TooLarge(format!(
                        "n = {n} exceeds the limit of {MAX_WEAK_N}"
                    )));
                }
                Ok(Board::Weak {
                    game: WeakGame::new(),
                    w: Permutation::reversal(n),
                })
            }
            "lattice" => {
                let file: LatticeFile =
                    serde_json::from_value(params.clone()).map_err(|e| invalid(format!("lattice: {e}")))?;
                let lattice = FiniteLattice::from_file(&file).map_err(|e| match e {
                    LatticeError::SizeLimit { .. } => ParamError::TooLarge(e.to_string()),
                    other => invalid(other.to_string()),
                })?;
                let x = lattice.top();
                Ok(Board::Lattice {
                    game: LatticeGame::new(lattice),
                    x,
                })
            }
            other => Err(invalid(format!("unknown family `{other}`"))),
        }
    }

    pub fn state(&self) -> Value {
        match self {
            Board::Skew { game, lam } => json!({ "lam": lam.parts(), "mu": game.floor().parts() }),
            Board::Tamari { w, .. } => json!(w.values()),
            Board::Weak { w, .. } => json!(w.values()),
            Board::Lattice { x, .. } => json!(x),
        }
    }

    /// Legal moves in the engine's canonical order.
    pub fn legal_moves(&mut self) -> Vec<Value> {
        match self {
            Board::Skew { game, lam } => {
                let lam = lam.clone();
                game.moves(&lam).iter().map(|to| removal(&lam, to)).collect()
            }
            Board::Tamari { game, w } => game.moves(w).iter().map(|y| json!({ "to": y.values() })).collect(),
            Board::Weak { game, w } => game.moves(w).iter().map(|y| json!({ "to": y.values() })).collect(),
            Board::Lattice { game, x } => game.moves(x).iter().map(|y| json!({ "to": y })).collect(),
        }
    }

    /// Moves into Eeta positions; empty exactly at Eeta positions.
    pub fn winning_moves(&mut self) -> Vec<Value> {
        match self {
            Board::Skew { game, lam } => {
                let lam = lam.clone();
                winning_moves(game, &lam).iter().map(|to| removal(&lam, to)).collect()
            }
            Board::Tamari { game, w } => winning_moves(game, w)
                .iter()
                .map(|y| json!({ "to": y.values() }))
                .collect(),
            Board::Weak { game, w } => winning_moves(game, w)
                .iter()
                .map(|y| json!({ "to": y.values() }))
                .collect(),
            Board::Lattice { game, x } => winning_moves(game, x).iter().map(|y| json!({ "to": y })).collect(),
        }
    }

    pub fn is_terminal(&mut self) -> bool {
        match self {
            Board::Skew { game, lam } => game.is_terminal(lam),
            Board::Tamari { game, w } => game.is_terminal(w),
            Board::Weak { game, w } => game.is_terminal(w),
            Board::Lattice { game, x } => game.is_terminal(x),
        }
    }

    /// Applies a move if it is one of the legal moves.
    pub fn apply(&mut self, mv: &Value) -> Result<Value, IllegalMove> {
        let canonical = self
            .legal_moves()
            .into_iter()
            .find(|m| same_move(m, mv))
            .ok_or(IllegalMove)?;
        match self {
            Board::Skew { lam, .. } => {
                let boxes = removed_boxes(&canonical).ok_or(IllegalMove)?;
                *lam = lam.without_corners(&boxes).ok_or(IllegalMove)?;
            }
            Board::Tamari { w, .. } => {
                let values = usize_array(&canonical["to"], "to").map_err(|_| IllegalMove)?;
                let p = Permutation::new(values).map_err(|_| IllegalMove)?;
                *w = Perm312::new(p).map_err(|_| IllegalMove)?;
            }
            Board::Weak { w, .. } => {
                let values = usize_array(&canonical["to"], "to").map_err(|_| IllegalMove)?;
                *w = Permutation::new(values).map_err(|_| IllegalMove)?;
            }
            Board::Lattice { x, .. } => {
                *x = canonical["to"].as_u64().ok_or(IllegalMove)? as usize;
            }
        }
        Ok(canonical)
    }

    /// Plays the engine's move, if any, and returns it.
    pub fn engine_reply(&mut self) -> Option<Value> {
        let mv = match self {
            Board::Skew { game, lam } => {
                let to = engine_move(game, lam)?;
                let mv = removal(lam, &to);
                *lam = to;
                mv
            }
            Board::Tamari { game, w } => {
                *w = engine_move(game, w)?;
                json!({ "to": w.values() })
            }
            Board::Weak { game, w } => {
                *w = engine_move(game, w)?;
                json!({ "to": w.values() })
            }
            Board::Lattice { game, x } => {
                *x = engine_move(game, x)?;
                json!({ "to": *x })
            }
        };
        Some(mv)
    }
}

/// `{"remove": [[row, col], ...]}`, 1-indexed, top row first.
fn removal(from: &Partition, to: &Partition) -> Value {
    let boxes: Vec<[usize; 2]> = (1..=from.len())
        .flat_map(|r| (to.row(r) + 1..=from.row(r)).map(move |c| [r, c]))
        .collect();
    json!({ "remove": boxes })
}

fn removed_boxes(mv: &Value) -> Option<Vec<(usize, usize)>> {
    mv.get("remove")?
        .as_array()?
        .iter()
        .map(|b| {
            let b = b.as_array()?;
            match b.as_slice() {
                [r, c] => Some((r.as_u64()? as usize, c.as_u64()? as usize)),
                _ => None,
            }
        })
        .collect()
}

/// Moves compare by content; box lists are order-insensitive.
fn same_move(canonical: &Value, given: &Value) -> bool {
    match (removed_boxes(canonical), removed_boxes(given)) {
        (Some(mut a), Some(mut b)) => {
            a.sort_unstable();
            b.sort_unstable();
            b.dedup();
            a == b
        }
        _ => canonical.get("to").is_some() && canonical.get("to") == given.get("to"),
    }
}
