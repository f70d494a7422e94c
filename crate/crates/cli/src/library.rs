//! Named fixtures shipped with the binary, printed as input documents.

use std::sync::Arc;

use serde_json::Value;
use skewcat_core::fincore::FinCat;
use skewcat_core::fixtures;
use skewcat_core::format::{
    AlgebraDoc, BicatDoc, CategoryDoc, HomBundleDoc, MwMonadDoc, ProfDoc, SkewMonCatDoc, WarpingDoc,
};
use skewcat_core::skew::{SkewBicat, SkewMonCat};
use skewcat_core::warpings::{mw_as_warping, SkewWarping, WarpingAlgebra};

pub struct Fixture {
    pub name: &'static str,
    pub kind: &'static str,
    pub build: fn() -> Value,
}

fn val<T: serde::Serialize>(doc: T) -> Value {
    serde_json::to_value(doc).expect("documents serialize")
}

fn moncat(name: &str) -> SkewMonCat {
    fixtures::skew_moncat_fixtures()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| s)
        .expect("fixture exists")
}

fn bundle(i: usize) -> HomBundleDoc {
    HomBundleDoc::from_bundle(&fixtures::hom_bundles()[i].1)
}

fn closure_warping() -> Arc<SkewWarping> {
    Arc::new(mw_as_warping(&fixtures::chain_closure_mw(&[1, 1, 2])).expect("mw-monad is valid"))
}

macro_rules! fx {
    ($name:expr, $kind:expr, $body:expr) => {
        Fixture {
            name: $name,
            kind: $kind,
            build: || val($body),
        }
    };
}

pub fn library() -> Vec<Fixture> {
    vec![
        fx!("1", "category", CategoryDoc::from_cat(&FinCat::terminal())),
        fx!("ch2", "category", CategoryDoc::from_cat(&fixtures::ch2())),
        fx!("ch3", "category", CategoryDoc::from_cat(&fixtures::ch3())),
        fx!("z2", "category", CategoryDoc::from_cat(&FinCat::cyclic_group(2))),
        fx!("z3", "category", CategoryDoc::from_cat(&FinCat::cyclic_group(3))),
        fx!("cofork", "category", CategoryDoc::from_cat(&fixtures::cofork_category().0)),
        fx!("terminal", "skew-moncat", SkewMonCatDoc::from_moncat(&fixtures::terminal_skew())),
        fx!("strict-z2", "skew-moncat", SkewMonCatDoc::from_moncat(&fixtures::strict_z2())),
        fx!("strict-z3", "skew-moncat", SkewMonCatDoc::from_moncat(&fixtures::strict_cyclic(3))),
        fx!("catgroup-2-2", "skew-moncat", SkewMonCatDoc::from_moncat(&moncat("categorical group (2,2)"))),
        fx!("twisted-2-3", "skew-moncat", SkewMonCatDoc::from_moncat(&moncat("twisted categorical group (2,3)"))),
        fx!("right-projection-ch2", "skew-moncat", SkewMonCatDoc::from_moncat(&fixtures::right_projection_ch2())),
        fx!("skew-ch3", "skew-moncat", SkewMonCatDoc::from_moncat(&fixtures::skew_ch3())),
        fx!("skew-ch3-x-bz2", "skew-moncat", SkewMonCatDoc::from_moncat(&moncat("skew Ch3 x BZ2"))),
        fx!(
            "suspension-catgroup-2-2",
            "skew-bicat",
            BicatDoc::from_bicat(&SkewBicat::suspension(&moncat("categorical group (2,2)")))
        ),
        fx!(
            "locally-discrete-ch3",
            "skew-bicat",
            BicatDoc::from_bicat(&SkewBicat::locally_discrete(&fixtures::ch3()).expect("valid category"))
        ),
        fx!("closure-ch3", "mw-monad", MwMonadDoc::from_mw(&fixtures::chain_closure_mw(&[1, 1, 2]))),
        fx!("const-top-ch3", "mw-monad", MwMonadDoc::from_mw(&fixtures::const_top_closure())),
        fx!("closure-warping-ch3", "warping", WarpingDoc::from_warping(&closure_warping())),
        fx!(
            "identity-warping-catgroup-2-2",
            "warping",
            WarpingDoc::from_warping(&SkewWarping::identity(&Arc::new(SkewBicat::suspension(&moncat(
                "categorical group (2,2)"
            )))))
        ),
        fx!("free-algebra-ch3", "algebra", AlgebraDoc::from_algebra(&WarpingAlgebra::free(&closure_warping(), 0))),
        fx!("hom-1", "hom-bundle", bundle(0)),
        fx!("hom-ch2", "hom-bundle", bundle(1)),
        fx!("hom-ch3", "hom-bundle", bundle(2)),
        fx!("hom-ch2-objects", "prof-list", bundle(1).objects),
        fx!("hom-ch2-endo", "prof-list", bundle(1).endo),
        fx!("hom-ch3-objects", "prof-list", bundle(2).objects),
        fx!("hom-ch3-endo", "prof-list", bundle(2).endo),
        fx!("hom-ch2-id", "prof", ProfDoc::from_prof(&fixtures::hom_bundles()[1].1.endo[0])),
    ]
}
