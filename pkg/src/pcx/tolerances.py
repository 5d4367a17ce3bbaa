"""Default numerical tolerances.

All are overridable through function arguments; these are the package-wide
defaults.
"""

# projective point equality: |<v, w>| >= 1 - EPS_POINT for unit representatives
EPS_POINT = 1e-9

# functional evaluations below this magnitude count as "on the hyperplane"
EPS_EVAL = 1e-12

# distance-to-boundary tolerance for boundary-point preconditions
EPS_BOUNDARY = 1e-8

# eigenvalue-magnitude clustering (relative)
EPS_SPECTRAL = 1e-8

# ray-bisection tolerance and iteration budget for slice extraction
SLICE_BISECT_TOL = 1e-12
SLICE_BISECT_ITERS = 50

# golden-section refinement iterations for boundary sups
REFINE_ITERS = 40

# default boundary sample counts
PLANAR_SAMPLES = 512
SLICE_SAMPLES = 512

# entry-magnitude guard for unipotent products
OVERFLOW_GUARD = 1e290
