use hopf_link_core::coalg::{
    check_axioms, coopposite, dual, dual_group_algebra, group_algebra, opposite, sweedler, taft, tensor, FinHopf,
};
use hopf_link_core::groups::GroupTable;
use hopf_link_core::link::{link_decomposition, principal_component, verify_dcp};
use hopf_link_core::radical::analyze;
use hopf_link_core::smash::{h12, h12_hopf_attempt, pointed_four, verify_smash_decomposition};
use hopf_link_core::{Cyclo, Error};

fn dims(h: &FinHopf) -> Vec<usize> {
    let data = analyze(h).unwrap();
    let (_, dec) = link_decomposition(h.coalgebra(), &data).unwrap();
    assert!(dec.is_direct_sum);
    let mut d = dec.dims();
    d.sort();
    d
}

#[test]
fn group_algebras_split_into_group_likes() {
    for g in [GroupTable::cyclic(3), GroupTable::symmetric(3)] {
        let h = group_algebra(&g);
        assert_eq!(dims(&h), vec![1; g.order()]);
    }
}

#[test]
fn dual_and_opposites_keep_component_shape() {
    let t = taft(3, &Cyclo::zeta(3)).unwrap();
    assert_eq!(dims(&t), vec![9]);
    for h in [opposite(&t), coopposite(&t), dual(&t).unwrap()] {
        assert!(check_axioms(&h).all_passed());
        assert_eq!(dims(&h), vec![9]);
    }
}

#[test]
fn tensor_with_cosemisimple_factor() {
    let h = tensor(&dual_group_algebra(&GroupTable::symmetric(3)), &sweedler());
    assert!(check_axioms(&h).all_passed());
    assert_eq!(dims(&h), vec![4, 4, 16]);
    let data = analyze(&h).unwrap();
    let (_, dec) = link_decomposition(h.coalgebra(), &data).unwrap();
    let out = verify_dcp(&h, &data, &dec).unwrap();
    assert!(out.report.all_passed(), "{}", out.report.summary());
    assert_eq!(dec.dims()[principal_component(&h, &dec).unwrap()], 4);
}

#[test]
fn smash_examples() {
    let s = h12().unwrap();
    assert_eq!(s.hopf().dim(), 12);
    let res = verify_smash_decomposition(&s).unwrap();
    assert!(res.report.all_passed(), "{}", res.report.summary());
    assert_eq!(dims(s.hopf()), vec![4, 8]);

    let p = pointed_four().unwrap();
    assert!(check_axioms(p.hopf()).all_passed());
    assert_eq!(dims(p.hopf()), dims(&sweedler()));
    assert_eq!(analyze(p.hopf()).unwrap().h0.dim(), 2);
    assert!(matches!(h12_hopf_attempt(), Err(Error::CoactionNotAlgebraMap)));
}
