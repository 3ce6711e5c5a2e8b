use powerdom::counting::{pd_polynomial, Method};
use powerdom::propagation::is_power_dominating;
use powerdom::threshold::{
    is_threshold_pds, normalize, threshold_graph, threshold_graph_any, threshold_pd_polynomial,
    threshold_pd_polynomial_any,
};
use powerdom::VertexSet;

/// Every string of length `len` whose first two symbols agree and whose last
/// symbol is 1.
fn normalized_strings(len: usize) -> Vec<String> {
    let free = len.saturating_sub(3);
    let mut out = Vec::new();
    for first in ['0', '1'] {
        for mask in 0u32..1 << free {
            let mut s = String::new();
            s.push(first);
            s.push(first);
            for k in 0..free {
                s.push(if mask >> k & 1 == 1 { '1' } else { '0' });
            }
            if len >= 3 {
                s.push('1');
            }
            if s.ends_with('1') && s.len() == len {
                out.push(s);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[test]
fn recurrence_matches_enumeration_up_to_10() {
    let mut checked = 0;
    for len in 2..=10 {
        for text in normalized_strings(len) {
            let b = normalize(&text).unwrap();
            let run = threshold_pd_polynomial(&b).unwrap();
            let brute = pd_polynomial(&threshold_graph(&b), Method::Lattice).unwrap();
            assert_eq!(run.polynomial, brute, "{text}");
            // Every intermediate is the polynomial of the corresponding prefix.
            for (prefix, poly) in &run.intermediates {
                let g = threshold_graph_any(&text[..*prefix]).unwrap();
                assert_eq!(
                    *poly,
                    pd_polynomial(&g, Method::Lattice).unwrap(),
                    "{text} prefix {prefix}"
                );
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 2 + 4 + 8 + 16 + 32 + 64 + 128 + 256);
}

#[test]
fn characterisation_matches_simulation_up_to_8() {
    for len in 2..=8 {
        for text in normalized_strings(len) {
            let b = normalize(&text).unwrap();
            let g = threshold_graph(&b);
            for bits in 0u64..1 << len {
                let s = VertexSet::from_bits(len, bits);
                assert_eq!(
                    is_threshold_pds(&b, s).unwrap(),
                    is_power_dominating(&g, s),
                    "{text} {s:?}"
                );
            }
        }
    }
}

#[test]
fn trailing_zeros_multiply_by_x() {
    for len in 1..=9 {
        for mask in 0u32..1 << len {
            let text: String = (0..len)
                .map(|k| if mask >> k & 1 == 1 { '1' } else { '0' })
                .collect();
            let g = threshold_graph_any(&text).unwrap();
            assert_eq!(
                threshold_pd_polynomial_any(&text).unwrap().polynomial,
                pd_polynomial(&g, Method::Lattice).unwrap(),
                "{text}"
            );
        }
    }
}

fn alternating(len: usize) -> String {
    let mut s: Vec<char> = (0..len)
        .map(|i| {
            if (len - 1 - i).is_multiple_of(2) {
                '1'
            } else {
                '0'
            }
        })
        .collect();
    s[0] = s[1];
    s.into_iter().collect()
}

#[test]
fn operation_count_is_quadratic() {
    let ops: Vec<f64> = [100, 200, 400]
        .iter()
        .map(|&n| {
            threshold_pd_polynomial(&normalize(&alternating(n)).unwrap())
                .unwrap()
                .ops as f64
        })
        .collect();
    for w in ops.windows(2) {
        let ratio = w[1] / w[0];
        assert!((3.5..=4.5).contains(&ratio), "ops {ops:?}");
    }
}
