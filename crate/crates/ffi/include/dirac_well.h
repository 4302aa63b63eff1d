#ifndef DIRAC_WELL_H
#define DIRAC_WELL_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DwNormalization {
  DW_NORMALIZATION_RAW = 0,
  DW_NORMALIZATION_UNIT_CHARGE = 1,
} DwNormalization;

typedef enum DwRegion {
  DW_REGION_INSIDE = 0,
  DW_REGION_OUTSIDE = 1,
} DwRegion;

typedef enum DwStatus {
  DW_STATUS_OK = 0,
  DW_STATUS_NULL_POINTER = 1,
  DW_STATUS_INVALID_CONFIG = 2,
  DW_STATUS_DOMAIN = 3,
  DW_STATUS_OUTSIDE_BOUND_WINDOW = 4,
  DW_STATUS_NO_CONVERGENCE = 5,
  DW_STATUS_QUADRATURE = 6,
  DW_STATUS_UNKNOWN_STATE = 7,
  DW_STATUS_INVALID = 8,
  DW_STATUS_PANIC = 9,
} DwStatus;

/**
 * Field evaluator for one state.
 */
typedef struct DwField DwField;

/**
 * Bound states of one well.
 */
typedef struct DwSolution DwSolution;

typedef struct DwWellConfig {
  double radius_nm;
  double potential_ev;
  uint32_t azimuthal_l;
} DwWellConfig;

/**
 * One bound state. Energies in eV, wave numbers in nm⁻¹.
 */
typedef struct DwState {
  uint32_t azimuthal_l;
  uint32_t radial_n;
  double energy_total_ev;
  double energy_kinetic_ev;
  double zeta_per_nm;
  double xi_per_nm;
  double ln_kappa;
  double kappa_sign;
  double boundary_residual;
} DwState;

typedef struct DwFieldSample {
  double rho_nm;
  double phi_rad;
  double re_psi1;
  double im_psi1;
  double re_psi4;
  double im_psi4;
  double j_rho;
  double j_phi;
  double j_z;
  double charge_density;
  enum DwRegion region;
} DwFieldSample;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *dw_version(void);

/**
 * Message for the last failure on this thread; empty after a success. The
 * pointer stays valid until the next call into this library on the thread.
 */
const char *dw_last_error(void);

/**
 * Solves for up to `max_states` bound states (0 means all) and stores a new
 * handle in `*out`.
 *
 * # Safety
 * `config` must point to a valid config and `out` to writable storage.
 */
enum DwStatus dw_solve(const struct DwWellConfig *config,
                       size_t max_states,
                       struct DwSolution **out);

/**
 * # Safety
 * `solution` must come from [`dw_solve`] and not be freed twice. Null is a
 * no-op.
 */
void dw_solution_free(struct DwSolution *solution);

/**
 * Number of states in the solution; 0 for null.
 *
 * # Safety
 * `solution` must be null or a live handle.
 */
size_t dw_solution_len(const struct DwSolution *solution);

/**
 * # Safety
 * `solution` must be a live handle and `out` writable.
 */
enum DwStatus dw_solution_state(const struct DwSolution *solution,
                                size_t index,
                                struct DwState *out);

/**
 * Fraction of the state's charge outside the well.
 *
 * # Safety
 * `solution` must be a live handle and `out` writable.
 */
enum DwStatus dw_solution_outside_fraction(const struct DwSolution *solution,
                                           size_t index,
                                           double *out);

/**
 * Creates a field evaluator for state `index`. The new handle does not
 * borrow the solution.
 *
 * # Safety
 * `solution` must be a live handle and `out` writable.
 */
enum DwStatus dw_field_new(const struct DwSolution *solution,
                           size_t index,
                           enum DwNormalization normalization,
                           struct DwField **out);

/**
 * # Safety
 * `field` must come from [`dw_field_new`] and not be freed twice. Null is a
 * no-op.
 */
void dw_field_free(struct DwField *field);

/**
 * Spinor, currents and charge density at (ρ in nm, φ in rad).
 *
 * # Safety
 * `field` must be a live handle and `out` writable.
 */
enum DwStatus dw_field_sample(const struct DwField *field,
                              double rho_nm,
                              double phi_rad,
                              struct DwFieldSample *out);

/**
 * n-th hard-wall wave number j₀,ₙ/R in nm⁻¹ (l must be 0).
 *
 * # Safety
 * `config` must point to a valid config and `out` be writable.
 */
enum DwStatus dw_infinite_well_zeta(const struct DwWellConfig *config, uint32_t n, double *out);

/**
 * J_n(x).
 *
 * # Safety
 * `out` must be writable.
 */
enum DwStatus dw_bessel_j(uint32_t n, double x, double *out);

/**
 * I_n(x).
 *
 * # Safety
 * `out` must be writable.
 */
enum DwStatus dw_bessel_i(uint32_t n, double x, double *out);

/**
 * eˣ K_n(x).
 *
 * # Safety
 * `out` must be writable.
 */
enum DwStatus dw_bessel_k_scaled(uint32_t n, double x, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIRAC_WELL_H */
