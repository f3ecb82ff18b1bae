#pragma once

// Numeric regression over the reference tables (first eigenvalue, scalar
// curvature, volume, and Yamabe stability ranges of every homogeneous CROSS
// family). Prints one PASS/FAIL line per cell and returns the failure count.
int run_tables(int which);
