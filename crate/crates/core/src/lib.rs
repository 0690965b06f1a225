//! Orbits of `K_C = GL_p x GL_q` on the full flag variety of `GL_{p+q}`
//! (the real form `U(p, q)`) and their behaviour under multiplication by
//! Schubert cell closures.
//!
//! The crate is organized bottom-up:
//!
//! - [`coxeter`]: the symmetric group as a Weyl group: length, reduced
//!   words, Bruhat order, Demazure products, parabolic longest elements.
//! - [`clans`]: clans, orbit dimensions, the monoid action of the minimal
//!   parabolics `P_i`, and the weak order graph.
//! - [`engine`]: closure products `S^cl (BwB)^cl`, minimal expressions,
//!   ascents, the closure order, codimension-one closures reachable from an
//!   orbit, and exhaustive checks of the statements built on them.
//! - [`oracle`]: brute-force enumeration of flags over `F_q` used as ground
//!   truth for the clan-side formulas.
//! - [`cli`]: the batch interface behind the `korbits` binary.
//!
//! ```
//! use korbits::clans::RealFormSpec;
//! use korbits::coxeter::WeylElement;
//! use korbits::engine::RsEngine;
//!
//! let engine = RsEngine::new(RealFormSpec::new(2, 1).unwrap()).unwrap();
//! let closed = "++-".parse().unwrap();
//! let w0 = WeylElement::from_one_line(vec![3, 2, 1]).unwrap();
//! let top = engine.demazure_on_orbit(&closed, &w0).unwrap();
//! assert!(top.is_open);
//! assert_eq!(top.clan.to_string(), "1+1");
//! ```

pub mod clans;
pub mod cli;
pub mod coxeter;
pub mod engine;
pub mod oracle;
pub mod report;
