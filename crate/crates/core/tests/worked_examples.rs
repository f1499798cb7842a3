use meshperm::bijections::{
    a1_complement_unchecked, complement_after_one, direct_transform, ltr_interval_complement,
    nine_box_steps_unchecked, nine_box_transform, oth1_transform, PatternPair,
};
use meshperm::catalog::{apply_family, builtin, Catalog};
use meshperm::mesh::{box_bit, occurrence_box_mask, MeshPattern, Shading, Symmetry};
use meshperm::perm::standardize;
use meshperm::{Execution, Permutation};

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn apply(cat: &Catalog, id: u32, p: &str) -> Permutation {
    apply_family(&perm(p), cat.get(id).unwrap()).unwrap()
}

fn values(p: &Permutation, occ: &[Vec<usize>]) -> Vec<String> {
    occ.iter()
        .map(|o| o.iter().map(|&i| p.as_slice()[i].to_string()).collect())
        .collect()
}

#[test]
fn figure_examples() {
    let cat = builtin();
    assert_eq!(
        apply(&cat, 12, "10,7,8,5,9,4,2,6,1,3,11"),
        perm("10,7,9,5,6,4,2,3,1,8,11")
    );
    assert_eq!(apply(&cat, 302, "958746132"), perm("897536421"));
    assert_eq!(
        apply(&cat, 23, "9,11,4,12,8,10,5,7,1,3,13,6,2"),
        perm("9,12,4,11,5,13,8,6,1,2,10,7,3")
    );
    assert_eq!(
        apply(&cat, 31, "10,4,7,9,8,6,1,5,2,3"),
        perm("10,4,9,8,6,7,1,5,3,2")
    );
}

#[test]
fn oth1_occurrences_and_family_entry() {
    let p = perm("10,7,8,5,9,4,2,6,1,3,11");
    let pair = PatternPair::same_shading(meshperm::bijections::oth1_shading()).unwrap();
    let mut got = values(&p, &pair.occurrences(p.as_slice()));
    got.sort();
    assert_eq!(got, ["263", "596", "789"]);
    assert_eq!(
        oth1_transform(&p),
        apply(&builtin(), 12, "10,7,8,5,9,4,2,6,1,3,11")
    );
}

#[test]
fn ltr_complement_matches_family() {
    let p = perm("9,11,4,12,8,10,5,7,1,3,13,6,2");
    assert_eq!(
        ltr_interval_complement(&p),
        apply(&builtin(), 23, "9,11,4,12,8,10,5,7,1,3,13,6,2")
    );
}

// The figure for the nine-box procedure leaves out the occurrence 4,10,5 and
// its printed image has counts (2, 4) for an input with (3, 3). The procedure
// merges that occurrence into the first block and differs from the figure at
// the two places it touches.
#[test]
fn nine_box_figure() {
    let cat = builtin();
    let pair = cat.get(46).unwrap().pair().unwrap();
    let p = perm("12,15,13,11,14,9,16,8,6,7,4,10,2,5,1,3");
    let figure = perm("12,15,13,11,16,9,10,8,6,14,4,7,2,3,1,5");
    let q = apply(&cat, 46, "12,15,13,11,14,9,16,8,6,7,4,10,2,5,1,3");
    assert_eq!(q, perm("12,15,13,11,16,9,10,8,6,14,4,5,2,3,1,7"));
    assert_eq!(pair.counts(p.as_slice()), (3, 3));
    assert_eq!(pair.counts(q.as_slice()), (3, 3));
    assert_eq!(pair.counts(figure.as_slice()), (2, 4));
    let differ: Vec<usize> = (0..16)
        .filter(|&i| q.as_slice()[i] != figure.as_slice()[i])
        .collect();
    assert_eq!(differ, [11, 15]);
    // The first block of the figure, taken alone, is reproduced.
    assert_eq!(&q.as_slice()[..10], &figure.as_slice()[..10]);
}

#[test]
fn nine_box_small_block() {
    let r = Shading::parse(3, "11,12,13,21,22,23,31,32,33").unwrap();
    // The second block of the figure on its own: 5 and 3 trade places.
    assert_eq!(nine_box_transform(&perm("2413"), r).unwrap(), perm("2314"));
    assert_eq!(nine_box_transform(&perm("123"), r).unwrap(), perm("132"));
}

#[test]
fn nine_box_rejected_shadings() {
    let cat = builtin();
    let total = |id: u32, p: &Permutation| {
        let (a, b) = cat.get(id).unwrap().pair().unwrap().counts(p.as_slice());
        a + b
    };
    let p = perm("34125");
    let steps = nine_box_steps_unchecked(&p, &cat.get(105).unwrap().pair().unwrap());
    assert_eq!(steps, [perm("35124"), perm("35142")]);
    assert!(total(105, &steps[0]) < total(105, &p));

    let p = perm("1324");
    let steps = nine_box_steps_unchecked(&p, &cat.get(106).unwrap().pair().unwrap());
    assert_eq!(steps, [perm("1423"), perm("1432")]);
    assert_ne!(total(106, &steps[1]), total(106, &p));
    assert!(nine_box_transform(&p, cat.get(106).unwrap().shading().unwrap()).is_err());
    assert!(nine_box_transform(&p, cat.get(105).unwrap().shading().unwrap()).is_err());
}

#[test]
fn a1_regression() {
    let cat = builtin();
    let pair = cat.get(102).unwrap().pair().unwrap();
    let p = perm("2,5,1,7,8,6,4,3");
    let q = a1_complement_unchecked(&p, &pair);
    assert_eq!(q, perm("2,5,1,4,3,6,7,8"));
    let (a, b) = pair.counts(p.as_slice());
    let (c, d) = pair.counts(q.as_slice());
    assert_ne!((a, b), (d, c));
    let rep = meshperm::bijections::verify_with(
        &pair,
        |x| a1_complement_unchecked(x, &pair),
        8,
        Execution::Parallel,
    )
    .unwrap();
    assert!(!rep.joint_swap);
}

#[test]
fn direct_and_complement_examples() {
    assert_eq!(direct_transform(&perm("12354"), 2).unwrap(), perm("13254"));
    assert_eq!(direct_transform(&perm("1234"), 4).unwrap(), perm("1432"));
    assert_eq!(direct_transform(&perm("2134"), 9).unwrap(), perm("2143"));
    assert_eq!(complement_after_one(&perm("12435")), perm("15342"));
    assert_eq!(
        perm("12435").complement_on_set(&[2, 4, 3, 5]),
        perm("15342")
    );
    assert_eq!(
        perm("2,5,1,7,8,6,4,3").complement_on_set(&[7, 8, 6, 4, 3]),
        perm("2,5,1,4,3,6,7,8")
    );
}

#[test]
fn len2_reduction_tail() {
    assert_eq!(apply(&builtin(), 21, "123"), perm("132"));
}

#[test]
fn perm_and_mesh_basics() {
    let p = perm("426153");
    assert_eq!(p.ltr_minima(), [0, 1, 3]);
    assert_eq!(p.rtl_maxima(), [2, 4, 5]);
    assert_eq!(standardize(&[5, 3, 4]), perm("312"));
    assert_eq!(
        occurrence_box_mask(&[1, 2, 4, 3], &[0, 1, 2]),
        1 << box_bit(3, 3, 2)
    );
    assert_eq!(
        occurrence_box_mask(&[2, 1, 3], &[0, 2]),
        1 << box_bit(2, 1, 0)
    );
}

#[test]
fn pattern_30_maps_to_46() {
    let cat = builtin();
    let p30 = MeshPattern::new(perm("123"), cat.get(30).unwrap().shading().unwrap()).unwrap();
    let image = p30
        .transform(Symmetry::Reverse)
        .transform(Symmetry::Complement);
    assert_eq!(image.tau(), &perm("123"));
    assert_eq!(image.shading(), cat.get(46).unwrap().shading().unwrap());
}

#[test]
fn verification_reports() {
    let cat = builtin();
    let check = |id: u32, n: usize| {
        cat.get(id)
            .unwrap()
            .bijection()
            .unwrap()
            .verify(n, Execution::Parallel)
            .unwrap()
    };
    // Not listed as an involution family, but the swaps undo themselves; checked
    // exhaustively through n = 10.
    let r = check(46, 6);
    assert!(r.bijective && r.joint_swap && r.involution);
    let r = check(23, 6);
    assert!(r.bijective && r.joint_swap && r.involution);
    let r = check(1, 3);
    assert!(r.bijective && r.joint_swap && r.involution);
}
