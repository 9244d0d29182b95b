#![allow(dead_code)]

use std::path::PathBuf;

use cuspcubes::diagram::{dual_graph, AlternatingDiagram, Color, TwistSequence};
use proptest::prelude::*;

pub const FIG8: &str = r#"{"pd": [[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]}"#;
pub const TREFOIL: &str = r#"{"pd": [[1,5,2,4],[3,1,4,6],[5,3,6,2]]}"#;

pub fn corpus() -> Vec<(String, AlternatingDiagram)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/pd");
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            (name, AlternatingDiagram::from_json(&std::fs::read_to_string(&p).unwrap()).unwrap())
        })
        .collect()
}

/// Determinant of an integer matrix by fraction-free elimination.
pub fn bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Link determinant of an alternating diagram: spanning trees of its Tait
/// graph, by the matrix-tree theorem.
pub fn tait_determinant(d: &AlternatingDiagram) -> i128 {
    let g = dual_graph(d, Color::Black);
    let idx = |r: usize| g.vertices.iter().position(|&v| v == r).unwrap();
    let n = g.vertices.len();
    let mut lap = vec![vec![0i128; n]; n];
    for &(a, b, _) in &g.edges {
        let (i, j) = (idx(a), idx(b));
        if i != j {
            lap[i][i] += 1;
            lap[j][j] += 1;
            lap[i][j] -= 1;
            lap[j][i] -= 1;
        }
    }
    let minor: Vec<Vec<i128>> = lap[1..].iter().map(|row| row[1..].to_vec()).collect();
    bareiss(minor).abs()
}

/// Numerator of a1 + 1/(a2 + 1/(... + 1/an)): the determinant of the
/// 2-bridge link with that twist sequence.
pub fn cf_determinant(a: &TwistSequence) -> i128 {
    let (mut num, mut den) = (1i128, 0i128);
    for &t in a.terms().iter().rev() {
        (num, den) = (t as i128 * num + den, num);
    }
    num
}

pub fn twist_sequence(max_len: usize, max_term: u32) -> impl Strategy<Value = TwistSequence> {
    (2..=max_len)
        .prop_flat_map(move |n| proptest::collection::vec(1..=max_term, n))
        .prop_map(|mut v| {
            let n = v.len();
            v[0] = v[0].max(2);
            v[n - 1] = v[n - 1].max(2);
            TwistSequence::new(v).unwrap()
        })
}
