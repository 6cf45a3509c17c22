use cylcob::json::InvariantJson;
use cylcob::linear::{tl_compose, tl_evaluate, tl_from_word, BarRep, Rational};
use cylcob::normal_form::{all_instances, check_relation, normalize, Relation};
use cylcob::syntax::parse_word;
use cylcob::{eq_in, evaluate, CategoryTag};

fn w(src: &str) -> cylcob::GeneratorWord {
    parse_word(src).unwrap()
}

#[test]
fn invariants_of_the_documented_words() {
    let j = InvariantJson::from(&evaluate(&w("tw(3)")).unwrap());
    assert_eq!((j.tau, j.t0, j.beta, j.mu), (3, Some(2), 0, 0));
    let j = InvariantJson::from(&evaluate(&w("d(2,1) . b(0,0)")).unwrap());
    assert_eq!((j.tau, j.t0, j.beta, j.mu), (0, None, 1, 0));
    let j = InvariantJson::from(&evaluate(&w("d(4,1) . b(2,1)")).unwrap());
    assert_eq!((j.tau, j.t0, j.beta, j.mu), (2, Some(1), 0, 1));
}

#[test]
fn normal_forms_print_as_documented() {
    assert_eq!(normalize(&w("tw(2)^5")).unwrap().to_string(), "tw(2)");
    assert_eq!(normalize(&w("d(4,2) . b(2,1)")).unwrap().to_string(), "id(2)");
    assert_eq!(normalize(&w("(d(2,1).b(0,0))^2")).unwrap().to_string(), "(d(2,1).b(0,0))^2");
}

#[test]
fn equality_per_category() {
    assert!(eq_in(CategoryTag::Cyl, &w("tw(4)^4"), &w("id(4)")).unwrap());
    assert!(!eq_in(CategoryTag::Da, &w("tw(4)^4"), &w("id(4)")).unwrap());
    assert!(!eq_in(CategoryTag::CylA, &w("d(4,1).b(2,1)"), &w("id(2)")).unwrap());
    assert!(eq_in(CategoryTag::Cyl, &w("d(4,1).b(2,1)"), &w("id(2)")).unwrap());
    assert!(eq_in(CategoryTag::Cyl, &w("id(2)"), &w("id(3)")).is_err());
}

#[test]
fn every_relation_family_holds_up_to_arity_six() {
    let instances = all_instances(6);
    for rel in Relation::ALL {
        assert!(instances.iter().any(|i| i.relation == rel), "{}", rel.name());
    }
    for inst in instances {
        assert!(check_relation(&inst).unwrap(), "{inst}");
    }
}

#[test]
fn loops_become_powers_of_delta() {
    let x = tl_from_word(&w("b(2,1)")).unwrap();
    let y = tl_from_word(&w("d(4,1)")).unwrap();
    let xy = tl_compose(&x, &y).unwrap();
    let bar = BarRep::new(3).unwrap();
    let three = Rational::from_integer(3.into());
    let m = tl_evaluate(&xy, &bar, &three).unwrap();
    assert_eq!(m, bar.word_matrix(&w("d(4,1).b(2,1)")).unwrap());
    assert_eq!(m, bar.word_matrix(&w("id(2)")).unwrap().scale(&three));
}
