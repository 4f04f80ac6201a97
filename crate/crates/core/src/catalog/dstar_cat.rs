//! Published unbiased-estimator coefficient catalog for moments and
//! cumulants of the sampling distribution of sample moments.

use crate::error::Result;
use crate::estimate::{parse_target, MuConvention};
use crate::partition::Partition;
use crate::ratfunc::parse_ratfunc;

use super::Discrepancy;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Finite,
    InfinitePopulation,
}

pub struct DStarFixture {
    /// target in the sampling convention, e.g. `mu(1^2)*mu(1^3)` or `kc(1^4)`
    pub target: &'static str,
    pub regime: Regime,
    pub entries: &'static [(&'static str, &'static str)],
    pub errata: Option<&'static str>,
}

macro_rules! ds_err {
    ($t:literal, $reg:ident, $e:literal, $entries:expr) => {
        DStarFixture { target: $t, regime: Regime::$reg, entries: $entries, errata: Some($e) }
    };
}

macro_rules! ds {
    ($t:literal, $reg:ident, $entries:expr) => {
        DStarFixture { target: $t, regime: Regime::$reg, entries: $entries, errata: None }
    };
    ($t:literal, $reg:ident, $entries:expr, $e:literal) => {
        DStarFixture { target: $t, regime: Regime::$reg, entries: $entries, errata: Some($e) }
    };
}

pub const DSTAR_FIXTURES: &[DStarFixture] = &[
    ds!("mu(1^2)", Finite, &[("2", "(N-n)*N^-1*(n-1)^-1")]),
    ds!("mu(1^3)", Finite, &[("3", "(N-2*n)*(N-n)*N^-2*(n-1)_2^-1")]),
    ds!("mu(1^4)", Finite, &[
        ("4", "-(N-n)*n^-1*(2*N^2*n-4*N^2+6*N*n-3*n^3-3*n^2)*(n-1)_3^-1*N^-3"),
        ("2^2", "3*(N-n)*n^-1*(N^2*n^2-4*N^2*n+4*N^2-N*n^3-6*N*n+6*N*n^2+3*n^2-3*n^3)*(n-1)_3^-1*N^-3"),
    ]),
    ds!("mu(1^5)", Finite, &[
        ("5", "-(N-n)*(N-2*n)*n^-1*(9*N^2*n-15*N^2+20*N*n-8*N*n^2-10*n^2-2*n^3)*(n-1)_4^-1*N^-4"),
        ("2 3", "10*(N-n)*(N-2*n)*n^-1*(N^2*n^2-3*N^2*n+3*N^2-N*n^3-4*N*n+4*N*n^2-2*n^3+2*n^2)*(n-1)_4^-1*N^-4"),
    ]),
    ds!("mu(1^6)", Finite, &[
        ("6", "(N-n)*n^-3*(-24*N^4+6*N^4*n^3-84*N^4*n^2+126*N^4*n+120*N^3*n^3-345*N^3*n^2+60*N^3*n+45*N^3*n^4-80*N^2*n^2+50*N^2*n^4+400*N^2*n^3-130*N^2*n^5+75*N*n^6-225*N*n^4+60*N*n^3-150*N*n^5-20*n^4+80*n^6+5*n^7+55*n^5)*(n-1)_5^-1*N^-5"),
        ("2 4", "-15*(N-n)*n^-3*(24*N^4+2*N^4*n^4-24*N^4*n^3+82*N^4*n^2-102*N^4*n-2*N^3*n^5-220*N^3*n^3+285*N^3*n^2-60*N^3*n+57*N^3*n^4-3*N^2*n^6+80*N^2*n^2+220*N^2*n^4-320*N^2*n^3-43*N^2*n^5+3*N*n^7+6*N*n^6-90*N*n^5-60*N*n^3+165*N*n^4+5*n^7+10*n^6+20*n^4-35*n^5)*(n-1)_5^-1*N^-5"),
        ("3^2", "10*(N-n)*n^-3*(24*N^4+N^4*n^4-12*N^4*n^3+57*N^4*n^2-90*N^4*n-5*N^3*n^5-165*N^3*n^3+255*N^3*n^2-60*N^3*n+39*N^3*n^4+8*N^2*n^6+80*N^2*n^2+175*N^2*n^4-280*N^2*n^3-47*N^2*n^5-4*N*n^7+24*N*n^6-75*N*n^5-60*N*n^3+135*N*n^4-5*n^7+10*n^6+20*n^4-25*n^5)*(n-1)_5^-1*N^-5"),
        ("2^3", "15*(24*N^4+N^4*n^4-12*N^4*n^3+46*N^4*n^2-66*N^4*n-2*N^3*n^5+30*N^3*n^4+180*N^3*n^2-60*N^3*n-122*N^3*n^3-210*N^2*n^3+N^2*n^6-27*N^2*n^5+127*N^2*n^4+80*N^2*n^2+120*N*n^4-60*N*n^3-59*N*n^5+9*N*n^6+10*n^6+20*n^4-30*n^5)*n^-2*(N-n)*(n-1)_5^-1*N^-5"),
    ]),
    // the printed rows for targets without unit parts claim the raw sample
    // product is its own estimator; the oracle refutes that for every case
    ds!("mu(2^2)", Finite, &[("4", "0"), ("2^2", "1")], "dstar-uncentered-rows"),
    ds!("mu(2^3)", Finite, &[("6", "0"), ("2 4", "0"), ("3^2", "0"), ("2^3", "1")], "dstar-uncentered-rows"),
    ds!("mu(3^2)", Finite, &[("6", "0"), ("2 4", "0"), ("3^2", "1"), ("2^3", "0")], "dstar-uncentered-rows"),
    ds!("mu(2 3)", Finite, &[("5", "0"), ("2 3", "1")], "dstar-uncentered-rows"),
    ds!("mu(1 2)", Finite, &[("3", "(N-n)*N^-1*(n-2)^-1")]),
    ds_err!("mu(1^2 2)", Finite, "dstar-uncentered-rows", &[
        ("4", "(N-n)*n^-1*(2*N-n-n^2)*(n-2)_2^-1*N^-2"),
        ("2^2", "(N-n)*n^-1*(6*N+N*n^2-6*N*n-3*n+3*n^2)*(n-2)_2^-1*N^-2"),
    ]),
    ds_err!("mu(1^3 2)", Finite, "dstar-uncentered-rows", &[
        ("5", "-(N-n)*(3*N^2*n-9*N^2+15*N*n-3*N*n^2-5*n^2-n^3)*n^-1*(n-2)_3^-1*N^-3"),
        ("2 3", "(N-n)*(4*N^2*n^2-18*N^2*n+18*N^2-5*N*n^3-30*N*n+30*N*n^2-10*n^3+10*n^2)*n^-1*(n-2)_3^-1*N^-3"),
    ]),
    ds_err!("mu(1^4 2)", Finite, "dstar-uncentered-rows", &[
        ("6", "-(N-n)*n^-3*(16*N^3+4*N^3*n^3+8*N^3*n^2-52*N^3*n+24*N^2*n^3-18*N^2*n^4+90*N^2*n^2-24*N^2*n-56*N*n^3+14*n^5*N-46*N*n^4+16*N*n^2+11*n^4-4*n^3+16*n^5+n^6)*(n-2)_4^-1*N^-4"),
        ("2 4", "-(N-n)*n^-3*(240*N^3+2*N^3*n^4-72*N^3*n^3+340*N^3*n^2-540*N^3*n+6*N^2*n^5+90*N^2*n^4+990*N^2*n^2-360*N^2*n-600*N^2*n^3-600*N*n^3-9*N*n^6-3*N*n^5+300*N*n^4+240*N*n^2+105*n^4-60*n^3-30*n^5-15*n^6)*(n-2)_4^-1*N^-4"),
        ("3^2", "2*(N-n)*n^-3*(80*N^3+2*N^3*n^4-16*N^3*n^3+70*N^3*n^2-140*N^3*n-6*N^2*n^5+42*N^2*n^4+270*N^2*n^2-120*N^2*n-150*N^2*n^3-160*N*n^3+4*N*n^6-29*N*n^5+85*N*n^4+80*N*n^2+25*n^4-20*n^3-10*n^5+5*n^6)*(n-2)_4^-1*N^-4"),
        ("2^3", "3*(N^3*n^4-16*N^3*n^3+76*N^3*n^2-140*N^3*n+80*N^3-120*N^2*n-N^2*n^5+24*N^2*n^4-128*N^2*n^3+240*N^2*n^2-150*N*n^3+80*N*n^2+69*N*n^4-9*N*n^5-10*n^5+30*n^4-20*n^3)*n^-2*(N-n)*(n-2)_4^-1*N^-4"),
    ]),
    ds!("mu(1 3)", Finite, &[
        ("4", "(N-n)*(n+1)*N^-1*n^-1*(n-3)^-1"),
        ("2^2", "-3*(N-n)*(n-1)*N^-1*n^-1*(n-3)^-1"),
    ]),
    ds_err!("mu(1^2 3)", Finite, "dstar-uncentered-rows", &[
        ("5", "(N-n)*N^-2*n^-1*(6*N-n^2-5*n)*(n-3)_2^-1"),
        ("2 3", "(N-n)*N^-2*n^-1*(N*n^2-12*N*n+12*N+10*n^2-10*n)*(n-3)_2^-1"),
    ]),
    ds_err!("mu(1^3 3)", Finite, "dstar-uncentered-rows", &[
        ("6", "-(N-n)*N^-3*n^-3*(12*N^2-12*N^2*n^2-27*N^2*n+3*N^2*n^3-3*N*n^4+30*N*n^3-12*N*n+33*N*n^2-11*n^3-n^5+4*n^2-16*n^4)*(n-3)_3^-1"),
        ("2 4", "3*(N-n)*N^-3*n^-3*(N^2*n^4-3*N^2*n^3-25*N^2*n^2+75*N^2*n-60*N^2+60*N*n-N*n^5+6*N*n^4+40*N*n^3-105*N*n^2+35*n^3-20*n^2-10*n^4-5*n^5)*(n-3)_3^-1"),
        ("3^2", "(N-n)*N^-3*n^-3*(120*N^2+N^2*n^4-6*N^2*n^3+15*N^2*n^2-90*N^2*n-120*N*n-2*N*n^5+24*N*n^4-60*N*n^3+150*N*n^2-50*n^3+40*n^2+20*n^4-10*n^5)*(n-3)_3^-1"),
        ("2^3", "-3*(-60*N^2+3*N^2*n^3-28*N^2*n^2+75*N^2*n-3*N*n^4+35*N*n^3-90*N*n^2+60*N*n-10*n^4+30*n^3-20*n^2)*n^-2*N^-3*(N-n)*(n-3)_3^-1"),
    ]),
    ds!("mu(1 4)", Finite, &[
        ("5", "(n^2-n-3)*(N-n)*n^-1*N^-1*(n-4)^-1*(n-2)^-1"),
        ("2 3", "-2*(n-1)*(2*n-3)*(N-n)*n^-1*N^-1*(n-4)^-1*(n-2)^-1"),
    ]),
    ds_err!("mu(1^2 4)", Finite, "dstar-1sq4-row", &[
        ("6", "(-36*N^4*n^3+8*N^4*n^4+22*N^4*n^2+54*N^4*n-24*N^4-N^3*n^6-155*N^3*n^2-118*N^3*n+3*N^3*n^5+121*N^3*n^3-18*N^3*n^4+72*N^3-N^2*n^6+7*N^2*n^5+60*N^2*n+233*N^2*n^3-126*N^2*n^4-5*N^2*n^2+64*N*n-96*N*n^3+4*N*n^4+32*N*n^5+12*N*n^6-304*N*n^2-112*n^5-64*n^2+208*n^3+168*n^4-8*n^6)*n^-3*(N-n)*(n-2)_4^-1*(N-3)^-1*N^-4"),
        ("2 4", "(110*N^4*n^4-204*N^4*n^3+450*N^4*n-21*N^4*n^5+N^4*n^6-360*N^4+1080*N^3+6*N^3*n^6-6*N^3*n^5-186*N^3*n^4-675*N^3*n^2-690*N^3*n+687*N^3*n^3-408*N^2*n^4+423*N^2*n^3-3*N^2*n^6+135*N^2*n^5-615*N^2*n^2+900*N^2*n+240*N*n^5+2400*N*n^3-468*N*n^4+960*N*n-108*N*n^6-3600*N*n^2-960*n^2+2160*n^3-1320*n^4+120*n^6)*n^-3*(N-n)*(n-2)_4^-1*(N-3)^-1*N^-4"),
        ("3^2", "-2*(10*N^4*n^4-57*N^4*n^3+65*N^4*n^2+90*N^4*n-120*N^4-310*N^3*n^2+39*N^3*n^4+360*N^3-50*N^3*n-10*N^3*n^5+71*N^3*n^3-2*N^2*n^6+2*N^2*n^5+300*N^2*n+184*N^2*n^3-45*N^2*n^4-295*N^2*n^2+720*N*n^3-124*N*n^4+28*N*n^6+320*N*n-64*N*n^5-1040*N*n^2+160*n^5-320*n^2+560*n^3-360*n^4)*n^-3*(N-n)*(n-2)_4^-1*(N-3)^-1*N^-4"),
        ("2^3", "6*(N-n)*n^-2*(2*N^4*n^4-18*N^4*n^3+64*N^4*n^2-105*N^4*n+60*N^4-180*N^3+205*N^3*n-2*n^5*N^3+15*N^3*n^4-31*N^3*n^3-32*N^3*n^2+141*N^2*n^3+90*N^2*n-228*N^2*n^2-27*N^2*n^4+24*N*n^5-160*N*n+320*N*n^2-72*N*n^4-72*N*n^3+200*n^4-40*n^5+160*n^2-320*n^3)*(n-2)_4^-1*(N-3)^-1*N^-4"),
    ]),
    ds_err!("mu(1 2^2)", Finite, "dstar-uncentered-rows", &[
        ("5", "-(n-1)*n^-1*N^-1*(N-n)*(n-4)^-1*(n-2)^-1"),
        ("2 3", "2*(n^2-3*n+1)*n^-1*N^-1*(N-n)*(n-4)^-1*(n-2)^-1"),
    ]),
    ds_err!("mu(1^2 2^2)", Finite, "dstar-uncentered-rows", &[
        ("6", "-(N-n)*(n-1)*(2*N*n^3-4*N*n^2-10*N*n+8*N-4*n+7*n^2+8*n^3-3*n^4)*N^-2*n^-3*(n-2)_4^-1"),
        ("2 4", "(N-n)*(120*N+16*N*n^4-102*N*n^3+200*N*n^2-150*N*n-145*n^3+105*n^2-60*n+n^5-2*n^6+53*n^4)*N^-2*n^-3*(n-2)_4^-1"),
        ("3^2", "2*(N-n)*(-40*N+N*n^5-9*N*n^4+31*N*n^3-45*N*n^2+30*N*n+40*n^3-25*n^2+20*n+8*n^5-n^6-26*n^4)*N^-2*n^-3*(n-2)_4^-1"),
        ("2^3", "(-120*N-17*N*n^4+92*N*n^3-208*N*n^2+210*N*n+N*n^5+60*n-48*n^4-120*n^2+6*n^5+126*n^3)*n^-2*N^-2*(N-n)*(n-2)_4^-1"),
    ]),
    ds_err!("mu(1 2 3)", Finite, "dstar-uncentered-rows", &[
        ("6", "-(1+n)*(n-1)^2*(N-n)*n^-3*N^-1*(n-3)^-1*(n-5)^-1"),
        ("2 4", "(n^4-10*n^2-15)*n^-3*N^-1*(N-n)*(n-3)^-1*(n-5)^-1"),
        ("3^2", "(n^4-5*n^3+5*n^2+5*n+10)*n^-3*N^-1*(N-n)*(n-3)^-1*(n-5)^-1"),
        ("2^3", "-3*(N-n)*N^-1*n^-2*(n^3-5*n^2+5*n-5)*(n-3)^-1*(n-5)^-1"),
    ]),
    // products of two sampling moments
    ds_err!("mu(1^2)^2", Finite, "dstar-product-zero-claims", &[
        ("4", "0"),
        ("2^2", "(N-n)^2*(N^2*n^2-3*N^2*n+3*N^2-2*N*n^2+3*N+3*n^2-3*n)*n^-1*(N-1)^-1*N^-3*(n-1)_3^-1"),
    ]),
    ds_err!("mu(1^2)*mu(1^3)", Finite, "dstar-product-zero-claims", &[
        ("5", "0"),
        ("2 3", "(N-n)^2*(N-2*n)*(N^2*n^2-5*N*n^2-2*N^2*n+2*N^2+10*N+10*n^2-10*n)*n^-1*(N-1)^-1*N^-4*(n-1)_4^-1"),
    ]),
    ds_err!("mu(1^2)*mu(1^4)", Finite, "dstar-product-copied-entry", &[
        ("6", "0"),
        ("3^2", "0"),
        ("2 4", "-(N-n)^2*(-63*N^4*n^3+190*N^4*n^2-225*N^4*n+8*N^4*n^4+60*N^4+60*N^3+640*N^3*n^2-525*N^3*n+98*N^3*n^4-12*N^3*n^5-345*N^3*n^3+198*N^2*n^4+3*N^2*n^6-45*N^2*n^5-750*N^2*n^3+1140*N^2*n^2-240*N^2*n-9*N*n^5-990*N*n^3+405*N*n^4+18*N*n^6+360*N*n^2-90*n^5-180*n^3+315*n^4-45*n^6)*N^-5*(n-1)_5^-1*(N-1)^-1*n^-3"),
        ("2^3", "(-60*N^2+n^5*N^2-11*N^2*n^4+44*N^2*n^3-82*N^2*n^2+90*N^2*n-60*N+21*N*n^4-96*N*n^2+180*N*n-24*N*n^3-3*N*n^5+60*n-48*n^4-120*n^2+6*n^5+126*n^3)*N^-2*(N-n)*(n-2)_4^-1*(N-1)^-1*n^-2"),
    ]),
    ds_err!("mu(1^3)^2", Finite, "dstar-product-zero-claims", &[
        ("6", "0"),
        ("2 4", "0"),
        ("2^3", "0"),
        ("3^2", "(N-2*n)^2*(N-n)^2*(N^3*n^4+25*N^3*n^2-40*N^3-10*N^3*n-8*N^3*n^3+8*N^2*n^3-26*N^2*n^2+70*N^2*n-4*N^2*n^4-120*N^2+14*N*n^4-4*N*n^3-70*N*n^2-80*N+220*N*n+80*n-100*n^2+40*n^3-20*n^4)*n^-3*(N-1)_2^-1*(n-1)_5^-1*N^-5"),
    ]),
    ds_err!("mu(1^2)*mu(1 2)", Finite, "dstar-product-zero-claims", &[
        ("5", "0"),
        ("2 3", "(N-n)^2*(N^2*n^2-2*N^2*n+2*N^2+10*N-5*N*n^2+10*n^2-10*n)*n^-1*(N-1)^-1*N^-3*(n-2)_3^-1"),
    ]),
    ds_err!("mu(1^2)*mu(1^2 2)", Finite, "dstar-product-uncentered-factors", &[
        ("6", "0"),
        ("3^2", "0"),
        ("2 4", "-(N-n)^2*(60*N^3+2*N^3*n^4-21*N^3*n^3+70*N^3*n^2-105*N^3*n-59*N^2*n^3+60*N^2-285*N^2*n+17*N^2*n^4+190*N^2*n^2-n^5*N^2-135*N*n^3-120*N*n+3*N*n^4-6*n^5*N+330*N*n^2+60*n^2+15*n^5-105*n^3+30*n^4)*(n-2)_4^-1*N^-4*(N-1)^-1*n^-3"),
        ("2^3", "(60*N^3+N^3*n^4-12*N^3*n^3+50*N^3*n^2-90*N^3*n+60*N^2+30*N^2*n^2-120*N^2*n+3*N^2*n^3-3*N*n^4-57*N*n^3-120*N*n+210*N*n^2-90*n^3+60*n^2+30*n^4)*(N-n)^2*(n-2)_4^-1*N^-4*(N-1)^-1*n^-2"),
    ]),
    ds_err!("mu(1^2)*mu(2^2)", Finite, "dstar-product-uncentered-factors", &[
        ("6", "0"),
        ("3^2", "0"),
        ("2 4", "-(N-n)^2*(-60*N+2*N*n^5-17*N*n^4+49*N*n^3-55*N*n^2+45*N*n-60+n^4-145*n^2+105*n+53*n^3-2*n^5)*N^-2*(N-1)^-1*(n-2)_4^-1*n^-3"),
        ("2^3", "(-60*N^2+N^2*n^5-11*N^2*n^4+44*N^2*n^3-82*N^2*n^2+90*N^2*n-60*N+21*N*n^4-96*N*n^2+180*N*n-24*N*n^3-3*n^5*N+60*n-48*n^4-120*n^2+6*n^5+126*n^3)*N^-2*(N-n)*(n-2)_4^-1*(N-1)^-1*n^-2"),
    ]),
    ds_err!("mu(1^3)*mu(1 2)", Finite, "dstar-product-zero-claims", &[
        ("6", "0"),
        ("2 4", "0"),
        ("2^3", "0"),
        ("3^2", "(N-2*n)*(N-n)^2*(N^3*n^4-40*N^3+25*N^3*n^2-8*N^3*n^3-10*N^3*n-26*N^2*n^2+70*N^2*n+8*N^2*n^3-120*N^2-4*N^2*n^4-70*N*n^2-80*N+14*N*n^4+220*N*n-4*N*n^3-20*n^4+40*n^3-100*n^2+80*n)*n^-3*(N-1)_2^-1*N^-4*(n-2)_4^-1"),
    ]),
    ds_err!("mu(1 2)^2", Finite, "dstar-product-zero-claims", &[
        ("6", "0"),
        ("2 4", "0"),
        ("2^3", "0"),
        ("3^2", "(n-1)*(N-n)^2*(N^3*n^4-40*N^3+25*N^3*n^2-8*N^3*n^3-10*N^3*n+8*N^2*n^3-26*N^2*n^2+70*N^2*n-120*N^2-4*N^2*n^4-4*N*n^3-70*N*n^2-80*N+220*N*n+14*N*n^4+40*n^3-100*n^2+80*n-20*n^4)*N^-3*n^-3*(N-1)_2^-1*(n-2)_4^-1"),
    ]),
    ds_err!("mu(1^2)^3", Finite, "dstar-product-zero-claims", &[
        ("6", "0"),
        ("2 4", "0"),
        ("3^2", "0"),
        ("2^3", "(N-n)^3*(N-2)*(N^3*n^3+9*N*n^3-15*n^3-3*N^2*n^3-9*N^3*n^2-9*N*n^2+9*N^2*n^2+45*n^2-30*n+29*N^3*n-6*N^2*n-45*N*n-30*N^3+30*N)*n^-1*(N-1)^-2*(n-1)_5^-1*N^-5"),
    ]),
    // infinite-population rows
    ds_err!("mu(1^2)^2", InfinitePopulation, "dstar-product-zero-claims", &[
        ("4", "0"),
        ("2^2", "n^-1*(n^2-3*n+3)*(n-1)_3^-1"),
    ]),
    ds_err!("mu(1^2)*mu(1^3)", InfinitePopulation, "dstar-product-zero-claims", &[
        ("5", "0"),
        ("2 3", "n^-1*(n^2-2*n+2)*(n-1)_4^-1"),
    ]),
    ds_err!("mu(1^2)*mu(1^4)", InfinitePopulation, "dstar-product-copied-entry", &[
        ("6", "0"),
        ("3^2", "0"),
        ("2 4", "-(8*n^4-63*n^3+190*n^2-225*n+60)*n^-3*(n-1)_5^-1"),
        ("2^3", "(n^4-9*n^3+26*n^2-30*n+30)*n^-2*(n-3)_3^-1"),
    ]),
    ds_err!("mu(1^3)^2", InfinitePopulation, "dstar-product-zero-claims", &[
        ("6", "0"),
        ("2 4", "0"),
        ("2^3", "0"),
        ("3^2", "n^-3*(n^4-8*n^3+25*n^2-10*n-40)*(n-1)_5^-1"),
    ]),
    ds_err!("mu(1^2)*mu(1 2)", InfinitePopulation, "dstar-product-zero-claims", &[
        ("5", "0"),
        ("2 3", "n^-1*(n^2-2*n+2)*(n-2)_3^-1"),
    ]),
    ds_err!("mu(1^2)*mu(1^2 2)", InfinitePopulation, "dstar-product-uncentered-factors", &[
        ("6", "0"),
        ("3^2", "0"),
        ("2 4", "-(2*n^4-21*n^3+70*n^2-105*n+60)*(n-2)_4^-1*n^-3"),
        ("2^3", "(n^3-10*n^2+30*n-30)*n^-2*(n-3)_3^-1"),
    ]),
    ds_err!("mu(1^2)*mu(2^2)", InfinitePopulation, "dstar-product-uncentered-factors", &[
        ("6", "0"),
        ("3^2", "0"),
        ("2 4", "-(2*n^5-17*n^4+49*n^3-55*n^2+45*n-60)*(n-2)_4^-1*n^-3"),
        ("2^3", "(n^4-9*n^3+26*n^2-30*n+30)*n^-2*(n-3)_3^-1"),
    ]),
    ds_err!("mu(1^3)*mu(1 2)", InfinitePopulation, "dstar-product-zero-claims", &[
        ("6", "0"),
        ("2 4", "0"),
        ("2^3", "0"),
        ("3^2", "n^-3*(n^4-8*n^3+25*n^2-10*n-40)*(n-2)_4^-1"),
    ]),
    ds_err!("mu(1 2)^2", InfinitePopulation, "dstar-product-zero-claims", &[
        ("6", "0"),
        ("2 4", "0"),
        ("2^3", "0"),
        ("3^2", "(n-1)*n^-3*(n^4-8*n^3+25*n^2-10*n-40)*(n-2)_4^-1"),
    ]),
    ds_err!("mu(1^2)^3", InfinitePopulation, "dstar-product-zero-claims", &[
        ("6", "0"),
        ("2 4", "0"),
        ("3^2", "0"),
        ("2^3", "n^-1*(n^2-7*n+15)*(n-3)_3^-1*(n-1)^-1"),
    ]),
    // sampling cumulants
    ds!("kc(1^4)", Finite, &[
        ("4", "(N-n)*(n*N^3+N^3-6*n^2*N^2-n*N^2-7*N^2+6*n^2*N+6*N*n^3+12*n*N-6*n^3-6*n^2)*(n-1)_3^-1*N^-3*(N-1)^-1*n^-1"),
        ("2^2", "-3*(N-n)*(n*N^3-N^3-4*n^2*N^2-n*N^2+7*N^2+6*n^2*N+4*N*n^3-12*n*N-6*n^3+6*n^2)*(n-1)_3^-1*N^-3*(N-1)^-1*n^-1"),
    ]),
    ds!("kc(1^5)", Finite, &[
        ("5", "(-N+2*n)*(-N+n)*(5*N^3+n*N^3-12*n^2*N^2-n*N^2-65*N^2+12*n^3*N+12*n^2*N+120*n*N-12*n^3-60*n^2)*n^-1*(n-1)_4^-1*N^-4*(N-1)^-1"),
        ("2 3", "-10*(N-2*n)*(N-n)*(n*N^3-N^3-6*n^2*N^2-n*N^2+13*N^2+6*n^3*N+12*n^2*N-24*n*N-12*n^3+12*n^2)*n^-1*(n-1)_4^-1*N^-4*(N-1)^-1"),
    ]),
    ds!("kc(1^6)", Finite, &[
        ("6", "(N-n)*(N^7*n^3-2880*N*n^3+3120*n^2*N^2-1440*n*N^3+960*n^4+248*N^4+600*n^7*N-3000*n^6*N^2+6150*n^5*N^3+13800*n^5*N+6000*n^6*N-16860*n^5*N^2-3840*n^6-240*n^7-2640*n^5-6300*N^4*n^4+18240*N^3*n^4-20280*N^2*n^4+8400*N*n^4+16050*n^3*N^3-10020*n^3*N^2-8402*n^3*N^4+5280*n^2*N^3-7592*n^2*N^4-922*n*N^4+2945*N^5*n^3-140*N^5-104*N^6+1430*N^5*n^2+2005*N^5*n-454*N^6*n^2-134*N^6*n+16*N^7*n^2-94*N^6*n^3+150*N^5*n^5-30*N^6*n^4-4*N^7-480*n^7*N^2+120*N^3*n^7-240*N^4*n^6+960*n^6*N^3-600*N^4*n^5+11*N^7*n+210*n^4*N^5)*N^-5*(n-1)_5^-1*(N-1)_2^-1*(N-1)^-1*n^-3", ),
        ("2 4", "-15*(N-n)*(N^7*n^3+2880*N*n^3-3120*n^2*N^2+1440*n*N^3-960*n^4-248*N^4+456*n^7*N-960*n^6*N^2+722*n^5*N^3+120*n^5*N+912*n^6*N-1596*n^5*N^2-480*n^6-240*n^7+1680*n^5-302*N^4*n^4+1512*N^3*n^4+3360*N^2*n^4-5520*N*n^4-6650*n^3*N^3+6900*n^3*N^2-626*n^3*N^4-3840*n^2*N^3+5236*n^2*N^4+674*n*N^4+115*N^5*n^3+140*N^5+104*N^6-44*N^5*n^2-1745*N^5*n-34*N^6*n^2+118*N^6*n+2*N^7*n^2-4*N^6*n^3+64*N^5*n^5-16*N^6*n^4+4*N^7-264*n^7*N^2+48*N^3*n^7-96*N^4*n^6+528*n^6*N^3-342*N^4*n^5-7*N^7*n+78*n^4*N^5)*n^-3*(n-1)_5^-1*(N-1)_2^-1*(N-1)^-1*N^-5", ),
        ("3^2", "-10*(N-n)*(N^7*n^3-2880*N*n^3+3120*n^2*N^2-1440*n*N^3+960*n^4+248*N^4+408*n^7*N-672*n^6*N^2+102*n^5*N^3-600*n^5*N-48*n^6*N+1284*n^5*N^2+480*n^6-240*n^7-1200*n^5+354*N^4*n^4-1704*N^3*n^4-1920*N^2*n^4+4080*N*n^4+5070*n^3*N^3-5340*n^3*N^2+790*n^3*N^4+3120*n^2*N^3-4496*n^2*N^4-550*n*N^4-241*N^5*n^3-140*N^5-104*N^6-4*N^5*n^2+1615*N^5*n+62*N^6*n^2-110*N^6*n-2*N^7*n^2-4*N^6*n^3+48*N^5*n^5-12*N^6*n^4-4*N^7-216*n^7*N^2+36*N^3*n^7-72*N^4*n^6+432*n^6*N^3-282*N^4*n^5+5*N^7*n+66*n^4*N^5)*n^-3*N^-5*(n-1)_5^-1*(N-1)_2^-1*(N-1)^-1", ),
        ("2^3", "30*(N-n)*(N^7*n^2+1440*N*n^3-1560*n^2*N^2+720*n*N^3-480*n^4-124*N^4-180*n^6*N^2+360*n^5*N^3-384*n^5*N+384*n^6*N-588*n^5*N^2-240*n^6+720*n^5-239*N^4*n^4-64*N^3*n^4+2292*N^2*n^4-1680*N*n^4-2796*n^3*N^3+900*n^3*N^2+563*n^3*N^4+540*n^2*N^3+1278*n^2*N^4-594*n*N^4+44*N^5*n^3+130*N^5-8*N^6-322*N^5*n^2-167*N^5*n+11*N^6*n^2+44*N^6*n-11*N^6*n^3+2*N^7+28*n^6*N^3-56*N^4*n^5-3*N^7*n+39*n^4*N^5)*n^-2*N^-5*(n-1)_5^-1*(N-1)_2^-1*(N-1)^-1", ),
    ]),
    ds!("kc(1^4 2)", Finite, &[
        ("6", "(N-n)*(N^6*n^3-1416*N*n^3+480*n^2*N+1244*n^2*N^2-400*n*N^2-298*n*N^3+528*n^4-192*n^3-92*N^4+120*N^3+96*n^6*N^2-144*n^5*N^3-1176*n^5*N-120*n^6*N+540*n^5*N^2-24*N^5+768*n^5+48*n^6+92*N^4*n^4-1090*N^3*n^4+2884*N^2*n^4-2376*N*n^4-2390*n^3*N^3+2932*n^3*N^2+907*n^3*N^4-1934*n^2*N^3+696*n^2*N^4+689*n*N^4-58*N^5*n^3+16*N^6*n^2+11*N^6*n-14*N^5*n^4-24*n^6*N^3+36*N^4*n^5-98*N^5*n-238*N^5*n^2-4*N^6)*n^-3*(n-2)_4^-1*(N-1)_2^-1*(N-1)^-1*N^-4", ),
        ("2 4", "-(N-n)*(15*N^6*n^3+14040*N*n^3-7200*n^2*N-12660*n^2*N^2+6000*n*N^2+2670*n*N^3-5040*n^4+2880*n^3+1380*N^4-1800*N^3+792*n^6*N^2-1260*n^5*N^3-2376*n^5*N-1368*n^6*N+2244*n^5*N^2+360*N^5+1440*n^5+720*n^6+564*N^4*n^4-1370*N^3*n^4+3948*N^2*n^4+360*N*n^4-2706*n^3*N^3-10980*n^3*N^2+723*n^3*N^4+16610*n^2*N^3-504*n^2*N^4-8235*n*N^4-84*N^5*n^3+30*N^6*n^2-105*N^6*n-118*N^5*n^4-144*n^6*N^3+240*N^4*n^5+1110*N^5*n-236*N^5*n^2+60*N^6)*n^-3*(n-2)_4^-1*(N-1)_2^-1*(N-1)^-1*N^-4", ),
        ("3^2", "-2*(N-n)*(5*N^6*n^3-3480*N*n^3+2400*n^2*N+3220*n^2*N^2-2000*n*N^2-590*n*N^3+1200*n^4-960*n^3-460*N^4+600*N^3+216*n^6*N^2-348*n^5*N^3+168*n^5*N-408*n^6*N+492*n^5*N^2-120*N^5-480*n^5+240*n^6+163*N^4*n^4+124*N^3*n^4-1276*N^2*n^4+360*N*n^4+1130*n^3*N^3+2420*n^3*N^2-391*n^3*N^4-4480*n^2*N^3+57*n^2*N^4+2395*n*N^4-8*N^5*n^3-10*N^6*n^2+25*N^6*n-31*N^5*n^4-36*n^6*N^3+60*N^4*n^5-310*N^5*n+133*N^5*n^2-20*N^6)*n^-3*(n-2)_4^-1*(N-1)_2^-1*(N-1)^-1*N^-4", ),
        ("2^3", "6*(N-n)*(5*N^6*n^2+1320*N*n^3-1200*n^2*N-180*n^2*N^2+1000*n*N^2-720*n*N^3-720*n^4+480*n^3+350*N^4-300*N^3-28*n^5*N^3-384*n^5*N+180*n^5*N^2-60*N^5+240*n^5+50*N^4*n^4-298*N^3*n^4+420*N^2*n^4+504*N*n^4+316*n^3*N^3-2116*n^3*N^2+116*n^3*N^4+1798*n^2*N^3-496*n^2*N^4-404*n*N^4-28*N^5*n^3-15*N^6*n+139*N^5*n+21*N^5*n^2+10*N^6)*n^-2*(n-2)_4^-1*(N-1)_2^-1*(N-1)^-1*N^-4", ),
    ]),
];

pub fn check_dstar_fixtures() -> Result<Vec<Discrepancy>> {
    let mut out = Vec::new();
    for f in DSTAR_FIXTURES {
        let target = parse_target(f.target, MuConvention::Sampling)?;
        let row = match f.regime {
            Regime::Finite => target.estimator_row()?,
            Regime::InfinitePopulation => target.estimator_row_infinite()?,
        };
        let mut mismatches = Vec::new();
        for (col, val) in f.entries {
            let col_pi: Partition = col.parse()?;
            let printed = parse_ratfunc(val)?;
            let derived = row.get(&col_pi);
            if printed != derived {
                mismatches.push(format!("col {col}: printed {printed}, derived {derived}"));
            }
        }
        if !mismatches.is_empty() {
            out.push(Discrepancy {
                table: "estimator coefficient catalog",
                label: format!("{} at {:?}", f.target, f.regime),
                printed: mismatches.join("; "),
                derived: String::new(),
                errata: f.errata,
            });
        }
    }
    Ok(out)
}

/// Targets whose printed rows are exact unbiased-estimator rows for the
/// UNCENTERED mixed sampling moments `E[(Xbar-mu)^a muhat_2^b muhat_3^c ...]`
/// rather than the centered products the section defines.  The account is
/// verified mechanically: the printed entries equal the uncentered rows to
/// the last coefficient.
pub const UNCENTERED_ACCOUNT: &[(&str, u32, &[u32])] = &[
    ("mu(2^2)", 0, &[2, 2]),
    ("mu(2 3)", 0, &[2, 3]),
    ("mu(3^2)", 0, &[3, 3]),
    ("mu(2^3)", 0, &[2, 2, 2]),
    ("mu(1^2 2)", 2, &[2]),
    ("mu(1^3 2)", 3, &[2]),
    ("mu(1^4 2)", 4, &[2]),
    ("mu(1^2 3)", 2, &[3]),
    ("mu(1^3 3)", 3, &[3]),
    ("mu(1 2^2)", 1, &[2, 2]),
    ("mu(1^2 2^2)", 2, &[2, 2]),
    ("mu(1 2 3)", 1, &[2, 3]),
];

/// Estimator row for an uncentered mixed sampling moment.
pub fn uncentered_ue_row(units: u32, rest: &[u32]) -> Result<crate::moments::PartitionVec> {
    use crate::matrices::gamma_row;
    let mut v = crate::moments::PartitionVec::zero();
    let r = units + rest.iter().sum::<u32>();
    for (pi, c) in gamma_row(units, rest)? {
        v.insert(pi, c);
    }
    crate::dstar::unbiased_row(&v, r)
}

/// Verify the uncentered account: every printed class member must equal the
/// uncentered estimator row entry for entry.
pub fn check_uncentered_account() -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for (target, units, rest) in UNCENTERED_ACCOUNT {
        let ue = uncentered_ue_row(*units, rest)?;
        let fixture = DSTAR_FIXTURES
            .iter()
            .find(|f| f.target == *target && f.regime == Regime::Finite)
            .ok_or_else(|| crate::error::Error::domain("missing fixture"))?;
        for (col, val) in fixture.entries {
            let col_pi: Partition = col.parse()?;
            let printed = parse_ratfunc(val)?;
            if printed != ue.get(&col_pi) {
                failures.push(format!("{target} col {col}"));
            }
        }
    }
    Ok(failures)
}

/// Worked sampling-cumulant expansions: the printed combination identities
/// for the fourth and fifth cumulants of the sample mean.
pub fn check_sampling_cumulant_combinations() -> Result<Vec<Discrepancy>> {
    use crate::dstar::sampling_cumulant_row;
    use crate::matrices::{expectation_matrix, Family};
    let mut out = Vec::new();
    // K(1^4): coefficient on 2^2 is C_{1^4,2^2} - 3 C_{1^2,2}^2
    {
        let row = sampling_cumulant_row(&"1^4".parse()?)?;
        let c4 = expectation_matrix(Family::CentralProduct, 4)?;
        let c2 = expectation_matrix(Family::CentralProduct, 2)?;
        let c12 = c2.entry(&"1^2".parse()?, &"2".parse()?)?.clone();
        let expected = c4
            .entry(&"1^4".parse()?, &"2^2".parse()?)?
            .sub(&c12.mul(&c12).scale(&crate::ratfunc::brat(3)));
        let closed = parse_ratfunc(
            "-3*(N-n)*(N^3+4*N*n^2-4*N^2*n-2*N^2+N+6*N*n-6*n^2)*n^-3*(N-1)^-2*(N-2)_2^-1",
        )?;
        let derived = row.get(&"2^2".parse()?);
        if derived != expected || derived != closed {
            out.push(Discrepancy {
                table: "sampling cumulant combinations",
                label: "K(1^4) on 2^2".into(),
                printed: closed.to_string(),
                derived: derived.to_string(),
                errata: None,
            });
        }
    }
    // K(1^5): coefficient on 2 3 is C_{1^5,2 3} - 10 C_{1^2,2} C_{1^3,3}
    {
        let row = sampling_cumulant_row(&"1^5".parse()?)?;
        let c5 = expectation_matrix(Family::CentralProduct, 5)?;
        let c2 = expectation_matrix(Family::CentralProduct, 2)?;
        let c3 = expectation_matrix(Family::CentralProduct, 3)?;
        let expected = c5.entry(&"1^5".parse()?, &"2 3".parse()?)?.sub(
            &c2.entry(&"1^2".parse()?, &"2".parse()?)?
                .mul(c3.entry(&"1^3".parse()?, &"3".parse()?)?)
                .scale(&crate::ratfunc::brat(10)),
        );
        let derived = row.get(&"2 3".parse()?);
        if derived != expected {
            out.push(Discrepancy {
                table: "sampling cumulant combinations",
                label: "K(1^5) on 2 3".into(),
                printed: "C(1^5,2 3) - 10 C(1^2,2) C(1^3,3)".into(),
                derived: derived.to_string(),
                errata: None,
            });
        }
    }
    Ok(out)
}
