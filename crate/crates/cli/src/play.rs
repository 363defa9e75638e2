//! Terminal play against the engine.

use std::io::{self, BufRead, Write};

use serde_json::{json, Value};
use ungar::weak::Permutation;
use ungar_service::board::Board;

fn numbers(v: &Value) -> Vec<usize> {
    v.as_array()
        .map(|a| a.iter().filter_map(Value::as_u64).map(|x| x as usize).collect())
        .unwrap_or_default()
}

/// Rows of the skew diagram: `.` inner shape, `*` removable corner, `#` other boxes.
fn diagram(lam: &[usize], mu: &[usize]) -> String {
    if lam.is_empty() {
        return "  (empty)\n".to_string();
    }
    let mut out = String::new();
    for (r, &len) in lam.iter().enumerate() {
        let floor = mu.get(r).copied().unwrap_or(0);
        let below = lam.get(r + 1).copied().unwrap_or(0);
        out.push_str("  ");
        for c in 1..=len {
            out.push(if c <= floor {
                '.'
            } else if c == len && len > below {
                '*'
            } else {
                '#'
            });
        }
        out.push('\n');
    }
    out
}

fn label(board: &Board, x: usize) -> String {
    match board {
        Board::Lattice { game, .. } => game.lattice().label_of(x),
        _ => x.to_string(),
    }
}

fn show_state(board: &Board) -> String {
    let s = board.state();
    match board {
        Board::Skew { .. } => diagram(&numbers(&s["lam"]), &numbers(&s["mu"])),
        Board::Tamari { .. } | Board::Weak { .. } => format!("  {}\n", join(&numbers(&s))),
        Board::Lattice { x, .. } => format!("  element {}\n", label(board, *x)),
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn show_move(board: &Board, mv: &Value) -> String {
    if let Some(boxes) = mv.get("remove").and_then(Value::as_array) {
        return boxes
            .iter()
            .map(|b| format!("({})", join(&numbers(b))))
            .collect::<Vec<_>>()
            .join(" ");
    }
    match &mv["to"] {
        Value::Number(x) => label(board, x.as_u64().unwrap_or(0) as usize),
        to => join(&numbers(to)),
    }
}

fn show_moves(board: &Board, moves: &[Value]) -> String {
    moves
        .iter()
        .map(|m| show_move(board, m))
        .collect::<Vec<_>>()
        .join(" | ")
}

/// Reads a move in the family's notation; `None` if it does not parse.
fn parse_move(board: &Board, line: &str) -> Option<Value> {
    match board {
        Board::Skew { .. } => {
            let mut boxes = Vec::new();
            for tok in line
                .split(|c: char| c.is_whitespace() || c == ';')
                .filter(|t| !t.is_empty())
            {
                let tok = tok.trim_start_matches('(').trim_end_matches(')');
                let (r, c) = tok.split_once(',')?;
                boxes.push([r.trim().parse::<usize>().ok()?, c.trim().parse::<usize>().ok()?]);
            }
            Some(json!({ "remove": boxes }))
        }
        Board::Tamari { .. } | Board::Weak { .. } => Permutation::parse(line).ok().map(|p| json!({ "to": p.values() })),
        Board::Lattice { game, .. } => {
            let l = game.lattice();
            let x = l
                .index_of_label(line)
                .or_else(|| line.parse().ok().filter(|&x| x < l.len()))?;
            Some(json!({ "to": x }))
        }
    }
}

fn notation(board: &Board) -> &'static str {
    match board {
        Board::Skew { .. } => "boxes to remove as row,col pairs, e.g. `1,3 2,2`",
        Board::Tamari { .. } | Board::Weak { .. } => "the target permutation, e.g. `1,3,2`",
        Board::Lattice { .. } => "the target element",
    }
}

/// Runs one game. The human moves first unless `engine_first`.
pub fn run(mut board: Board, engine_first: bool, input: &mut impl BufRead, out: &mut impl Write) -> io::Result<()> {
    writeln!(
        out,
        "Enter {}; `hint` lists winning moves, `quit` ends the game.",
        notation(&board)
    )?;
    let mut human_to_move = !engine_first;
    loop {
        write!(out, "\n{}", show_state(&board))?;
        if board.is_terminal() {
            if human_to_move {
                writeln!(out, "You cannot make a nontrivial Ungar move. The engine wins.")?;
            } else {
                writeln!(out, "The engine cannot make a nontrivial Ungar move. You win.")?;
            }
            return Ok(());
        }
        if human_to_move {
            let legal = board.legal_moves();
            writeln!(out, "legal: {}", show_moves(&board, &legal))?;
            loop {
                write!(out, "your move> ")?;
                out.flush()?;
                let mut line = String::new();
                if input.read_line(&mut line)? == 0 {
                    writeln!(out, "\nquit")?;
                    return Ok(());
                }
                let line = line.trim();
                match line {
                    "" => continue,
                    "q" | "quit" => {
                        writeln!(out, "quit")?;
                        return Ok(());
                    }
                    "h" | "hint" => {
                        let win = board.winning_moves();
                        if win.is_empty() {
                            writeln!(out, "no winning move")?;
                        } else {
                            writeln!(out, "winning: {}", show_moves(&board, &win))?;
                        }
                        continue;
                    }
                    _ => {}
                }
                match parse_move(&board, line).map(|m| board.apply(&m)) {
                    Some(Ok(_)) => break,
                    _ => writeln!(out, "illegal move; legal: {}", show_moves(&board, &legal))?,
                }
            }
        } else {
            let mv = board.engine_reply().expect("position is not terminal");
            writeln!(out, "engine plays {}", show_move(&board, &mv))?;
        }
        human_to_move = !human_to_move;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn play(family: &str, params: Value, engine_first: bool, input: &str) -> String {
        let board = Board::create(family, &params).unwrap();
        let mut out = Vec::new();
        run(board, engine_first, &mut input.as_bytes(), &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn diagram_marks_corners_and_floor() {
        assert_eq!(diagram(&[3, 2, 2], &[1]), "  .#*\n  ##\n  #*\n");
        assert_eq!(diagram(&[], &[]), "  (empty)\n");
    }

    #[test]
    fn single_box_is_a_human_win() {
        let out = play("skew", json!({ "lam": [1] }), false, "1,1\n");
        assert!(out.ends_with("You win.\n"), "{out}");
    }

    #[test]
    fn illegal_move_is_rejected_and_reprompted() {
        let out = play("skew", json!({ "lam": [1] }), false, "(3,3)\nhint\n1,1\n");
        assert!(out.contains("illegal move; legal: (1,1)"));
        assert!(out.contains("winning: (1,1)"));
        assert!(out.ends_with("You win.\n"));
    }

    #[test]
    fn engine_wins_the_square() {
        // After the only opening move the engine leaves the column (1,1).
        let out = play("skew", json!({ "lam": [2, 2] }), false, "2,2\n2,1\n");
        assert!(out.contains("engine plays (1,2)\n"), "{out}");
        assert!(out.ends_with("The engine wins.\n"));
    }

    #[test]
    fn tamari_engine_first() {
        let out = play("tamari", json!({ "n": 3 }), true, "");
        assert!(out.contains("engine plays 1,2,3"));
        assert!(out.ends_with("The engine wins.\n"));
    }

    #[test]
    fn quit_and_eof_end_quietly() {
        assert!(play("weak", json!({ "n": 3 }), false, "quit\n").ends_with("quit\n"));
        assert!(play("weak", json!({ "n": 3 }), false, "").ends_with("quit\n"));
    }
}
