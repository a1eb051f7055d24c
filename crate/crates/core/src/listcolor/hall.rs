//! Distinct representatives by bipartite matching.

use super::ColorSet;

/// One colour per list, pairwise distinct, if such a choice exists.
///
/// Augmenting paths (Kuhn), lists against colours.
pub fn system_of_distinct_representatives(lists: &[ColorSet]) -> Option<Vec<u32>> {
    let mut owner: [Option<usize>; 64] = [None; 64];
    for i in 0..lists.len() {
        let mut seen = 0u64;
        if !augment(i, lists, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut pick = vec![0u32; lists.len()];
    for (c, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            pick[*i] = c as u32;
        }
    }
    Some(pick)
}

fn augment(i: usize, lists: &[ColorSet], owner: &mut [Option<usize>; 64], seen: &mut u64) -> bool {
    for c in lists[i].iter() {
        if *seen >> c & 1 == 1 {
            continue;
        }
        *seen |= 1 << c;
        match owner[c as usize] {
            None => {
                owner[c as usize] = Some(i);
                return true;
            }
            Some(j) => {
                if augment(j, lists, owner, seen) {
                    owner[c as usize] = Some(i);
                    return true;
                }
            }
        }
    }
    false
}

/// List-colourability of a complete graph with these lists.
pub fn clique_list_colorable(lists: &[ColorSet]) -> bool {
    system_of_distinct_representatives(lists).is_some()
}
