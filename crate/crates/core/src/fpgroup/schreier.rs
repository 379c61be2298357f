use std::collections::VecDeque;

use super::{CosetTable, GroupError, Letter, Presentation, Word};

/// Presentation of the subgroup described by a closed coset table.
///
/// A breadth-first spanning tree of the Schreier graph is grown from coset 0.
/// Every edge `c --g--> c·g` off the tree becomes a generator named `g_c`, and
/// each relator of the parent presentation read from each coset becomes a
/// relator.
pub fn reidemeister_schreier(t: &CosetTable) -> Result<Presentation, GroupError> {
    t.validate().map_err(|_| GroupError::TableNotClosed)?;
    let p = t.presentation();
    let n = t.index();
    let m = p.generator_count();

    // tree[c][g]: the edge c --g--> c·g is a tree edge
    let mut tree = vec![vec![false; m]; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    if n > 0 {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(c) = queue.pop_front() {
        #[allow(clippy::needless_range_loop)]
        for g in 0..m {
            for l in [Letter::pos(g), Letter::neg(g)] {
                let d = t.image(c, l);
                if !seen[d] {
                    seen[d] = true;
                    if l.inverse {
                        tree[d][g] = true;
                    } else {
                        tree[c][g] = true;
                    }
                    queue.push_back(d);
                }
            }
        }
    }

    let mut names = Vec::new();
    let mut gen_index = vec![vec![usize::MAX; m]; n];
    for c in 0..n {
        for g in 0..m {
            if !tree[c][g] {
                gen_index[c][g] = names.len();
                names.push(format!("{}_{c}", p.generators()[g]));
            }
        }
    }

    let mut relators = Vec::with_capacity(n * p.relator_count());
    for r in p.relators() {
        for start in 0..n {
            let mut c = start;
            let mut letters = Vec::new();
            for &l in r.letters() {
                if l.inverse {
                    let d = t.image(c, l);
                    if !tree[d][l.generator] {
                        letters.push(Letter::neg(gen_index[d][l.generator]));
                    }
                    c = d;
                } else {
                    if !tree[c][l.generator] {
                        letters.push(Letter::pos(gen_index[c][l.generator]));
                    }
                    c = t.image(c, l);
                }
            }
            debug_assert_eq!(c, start);
            relators.push(Word::new(letters));
        }
    }
    Presentation::new(names, relators)
}
