//! Toric f/g polynomials of cubical complexes and their expansion in the
//! Adin h-basis.

mod complex;
mod qpoly;
mod routes;

pub use complex::{g_from_f, FaceComplex, MAX_CUBE_DIM};
pub use qpoly::{
    c_poly, c_poly_nc, c_poly_nc_with_guard, g_cube, g_cube_gessel, g_cube_nc, g_cube_table,
    q_poly, q_poly_nc, q_poly_nc_with_guard, q_poly_pascal, GMethod, QTable, DEFAULT_Q_GUARD,
};
pub use routes::{toric_f_cubical, toric_f_from_adin, toric_f_from_shelling};

pub(crate) use qpoly::csv_row;
