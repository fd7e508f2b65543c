use proptest::prelude::*;
use vagueset::{build_matrix, Judgment, Polarity, Region, SelectionMatrix, Share, SubjectId, Universe};

fn universe() -> Universe {
    Universe::new(0.0, 100.0).unwrap()
}

/// `raw[name][subject]` is a list of integer `[lo, hi)` pairs.
type Raw = Vec<Vec<Vec<(u32, u32)>>>;

fn raw_matrix() -> impl Strategy<Value = Raw> {
    (1usize..20, 1usize..4).prop_flat_map(|(subjects, names)| {
        let cell = prop::collection::vec((0u32..100, 0u32..=100), 0..3).prop_map(|v| {
            v.into_iter()
                .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
                .collect::<Vec<_>>()
        });
        prop::collection::vec(prop::collection::vec(cell, subjects), names)
    })
}

fn name(i: usize) -> String {
    format!("n{i}")
}

fn build(raw: &Raw) -> SelectionMatrix {
    let mut judgments = Vec::new();
    for (n, row) in raw.iter().enumerate() {
        for (s, cell) in row.iter().enumerate() {
            let subject = SubjectId::new(format!("s{s:03}")).unwrap();
            // An empty judgment still registers the subject.
            judgments.push(Judgment::new(subject.clone(), name(n), universe().empty(), Polarity::For));
            for &(lo, hi) in cell {
                let region = Region::interval(lo as f64, hi as f64, universe()).unwrap();
                judgments.push(Judgment::new(subject.clone(), name(n), region, Polarity::For));
            }
        }
    }
    build_matrix(judgments, universe()).unwrap()
}

fn oracle_count(cells: &[Vec<(u32, u32)>], omega: f64) -> u32 {
    cells
        .iter()
        .filter(|cell| cell.iter().any(|&(a, b)| a as f64 <= omega && omega < b as f64))
        .count() as u32
}

fn probes() -> Vec<f64> {
    (0..200).map(|i| i as f64 / 2.0).collect()
}

proptest! {
    #[test]
    fn membership_matches_counting(raw in raw_matrix()) {
        let m = build(&raw);
        let pop = raw[0].len() as u32;
        for (n, row) in raw.iter().enumerate() {
            let curve = m.row(&name(n)).unwrap().membership().unwrap();
            let mut points = curve.probe_points();
            points.extend(probes());
            for w in points {
                prop_assert_eq!(*curve.eval(w).unwrap(), Share::new(oracle_count(row, w), pop));
            }
            prop_assert!(curve.values().windows(2).all(|v| v[0] != v[1]));
        }
    }

    #[test]
    fn minkowski_identities(raw in raw_matrix()) {
        let m = build(&raw);
        let pop = m.population() as u32;
        let x = m.row(&name(0)).unwrap();
        let y = m.row(&name(raw.len() - 1)).unwrap();
        let count = |e: &vagueset::VagueEvent, w: f64| e.membership().unwrap().eval(w).unwrap().count();
        let and = x.and(&y).unwrap();
        let or = x.or(&y).unwrap();
        let sym = x.symdiff(&y).unwrap();
        let not = x.not();
        prop_assert_eq!(or.not(), x.not().and(&y.not()).unwrap());
        prop_assert_eq!(and.not(), x.not().or(&y.not()).unwrap());
        for w in probes() {
            let (p, q, r) = (count(&x, w), count(&y, w), count(&and, w));
            prop_assert_eq!(count(&not, w), pop - p);
            prop_assert_eq!(count(&or, w), p + q - r);
            prop_assert_eq!(count(&sym, w), p + q - 2 * r);
            prop_assert!((p + q).saturating_sub(pop) <= r && r <= p.min(q));
            let o = count(&or, w);
            prop_assert!(p.max(q) <= o && o <= (p + q).min(pop));
        }
    }
}
