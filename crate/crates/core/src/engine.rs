//! Uniform interface to the playable game families and the engine policy.
//!
//! The engine plays to the least Eeta successor when one exists, otherwise
//! to the least successor, where "least" is the natural order on states.

use std::collections::HashMap;
use std::fmt::Debug;

use crate::lattice::{FiniteLattice, WinLabel};
use crate::tamari::{is_eeta_tam, Perm312, TamariMoves};
use crate::weak::{weak_moves, Permutation, WeakLabeler};
use crate::young::Partition;

pub trait Game {
    type State: Clone + Ord + Debug;

    /// Nontrivial successors in increasing order.
    fn moves(&mut self, s: &Self::State) -> Vec<Self::State>;

    fn label(&mut self, s: &Self::State) -> WinLabel;

    fn is_terminal(&mut self, s: &Self::State) -> bool {
        self.moves(s).is_empty()
    }
}

/// Successors that leave the opponent in an Eeta position.
pub fn winning_moves<G: Game>(g: &mut G, s: &G::State) -> Vec<G::State> {
    g.moves(s).into_iter().filter(|y| g.label(y).is_eeta()).collect()
}

/// The engine's reply, `None` at a terminal position.
pub fn engine_move<G: Game>(g: &mut G, s: &G::State) -> Option<G::State> {
    let moves = g.moves(s);
    let best = moves.iter().find(|y| g.label(y).is_eeta()).cloned();
    best.or_else(|| moves.into_iter().next())
}

/// Nibble on the skew shape `lam / mu`; states are partitions between them.
pub struct SkewGame {
    floor: Partition,
    memo: HashMap<Partition, bool>,
}

impl SkewGame {
    pub fn new(mu: Partition) -> Self {
        SkewGame {
            floor: mu,
            memo: HashMap::new(),
        }
    }

    pub fn floor(&self) -> &Partition {
        &self.floor
    }

    /// Corners of `lam` outside the floor, top row first.
    pub fn removable(&self, lam: &Partition) -> Vec<(usize, usize)> {
        lam.corners()
            .into_iter()
            .filter(|&(r, c)| c > self.floor.row(r))
            .collect()
    }

    fn eeta(&mut self, lam: &Partition) -> bool {
        if let Some(&e) = self.memo.get(lam) {
            return e;
        }
        let moves = self.moves(lam);
        let e = !moves.iter().any(|y| self.eeta(y));
        self.memo.insert(lam.clone(), e);
        e
    }
}

impl Game for SkewGame {
    type State = Partition;

    fn moves(&mut self, lam: &Partition) -> Vec<Partition> {
        let corners = self.removable(lam);
        let mut out: Vec<Partition> = (1u32..1 << corners.len())
            .map(|mask| {
                let chosen: Vec<(usize, usize)> = corners
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &c)| c)
                    .collect();
                lam.without_corners(&chosen).expect("corners are removable")
            })
            .collect();
        out.sort();
        out
    }

    fn label(&mut self, lam: &Partition) -> WinLabel {
        WinLabel::from_eeta(self.eeta(lam))
    }
}

#[derive(Default)]
pub struct TamariGame {
    moves: TamariMoves,
}

impl TamariGame {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Game for TamariGame {
    type State = Perm312;

    fn moves(&mut self, w: &Perm312) -> Vec<Perm312> {
        self.moves.moves(w).into_iter().filter(|y| y != w).collect()
    }

    fn label(&mut self, w: &Perm312) -> WinLabel {
        WinLabel::from_eeta(is_eeta_tam(w))
    }
}

#[derive(Default)]
pub struct WeakGame {
    labeler: WeakLabeler,
}

impl WeakGame {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Game for WeakGame {
    type State = Permutation;

    fn moves(&mut self, w: &Permutation) -> Vec<Permutation> {
        weak_moves(w)
    }

    fn label(&mut self, w: &Permutation) -> WinLabel {
        self.labeler.label(w)
    }
}

/// An explicit lattice; states are element indices.
pub struct LatticeGame {
    lattice: FiniteLattice,
    labels: Vec<WinLabel>,
}

impl LatticeGame {
    pub fn new(lattice: FiniteLattice) -> Self {
        let labels = lattice.solve();
        LatticeGame { lattice, labels }
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }
}

impl Game for LatticeGame {
    type State = usize;

    fn moves(&mut self, x: &usize) -> Vec<usize> {
        self.lattice.ungar_moves(*x).into_iter().filter(|y| y != x).collect()
    }

    fn label(&mut self, x: &usize) -> WinLabel {
        self.labels[*x]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plays engine against engine and checks the first player's fate.
    fn selfplay<G: Game>(g: &mut G, start: G::State) -> bool {
        let first_wins = !g.label(&start).is_eeta();
        let mut s = start;
        let mut mover_is_first = true;
        while let Some(next) = engine_move(g, &s) {
            s = next;
            mover_is_first = !mover_is_first;
        }
        // The player to move at a terminal position has lost.
        first_wins == !mover_is_first
    }

    #[test]
    fn skew_moves() {
        let mut g = SkewGame::new(Partition::empty());
        let lam = Partition::parse("2,2").unwrap();
        assert_eq!(g.moves(&lam), vec![Partition::parse("2,1").unwrap()]);
        assert!(g.is_terminal(&Partition::empty()));
        let mut g = SkewGame::new(Partition::parse("1").unwrap());
        assert!(g.moves(&Partition::parse("1").unwrap()).is_empty());
    }

    #[test]
    fn tamari_hint() {
        let mut g = TamariGame::new();
        let top = Perm312::top(3);
        let hint: Vec<String> = winning_moves(&mut g, &top).iter().map(Perm312::compact).collect();
        assert_eq!(hint, vec!["123", "231"]);
        assert_eq!(engine_move(&mut g, &top).unwrap().compact(), "123");
    }

    #[test]
    fn engine_wins_from_atniss() {
        let mut g = SkewGame::new(Partition::empty());
        for lam in ["3,2,1", "4,4", "5,3,3,1"] {
            assert!(selfplay(&mut g, Partition::parse(lam).unwrap()));
        }
        let mut t = TamariGame::new();
        assert!(selfplay(&mut t, Perm312::top(5)));
        let mut w = WeakGame::new();
        assert!(selfplay(&mut w, Permutation::reversal(5)));
    }

    #[test]
    fn lattice_game_matches_solver() {
        let l = crate::lattice::chain(4);
        let mut g = LatticeGame::new(l);
        assert_eq!(g.moves(&3), vec![2]);
        assert_eq!(g.label(&0), WinLabel::Eeta);
        assert_eq!(g.label(&3), WinLabel::Atniss);
    }
}
