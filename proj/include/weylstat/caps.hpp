#ifndef WEYLSTAT_CAPS_HPP
#define WEYLSTAT_CAPS_HPP

namespace weylstat {

// Desk-scale guard rails. Exhaustive enumeration is factorial-times-exponential,
// so brute-force entry points refuse n above these caps instead of hanging.
// Each value can be raised (or lowered) through an environment variable; closed
// forms and series identities are not subject to them.
struct Caps {
    int window_degree = 16; // WEYLSTAT_CAP_DEGREE: max window length anywhere
    int brute_a = 10;       // WEYLSTAT_CAP_A: max n for type-A enumeration
    int brute_bd = 8;       // WEYLSTAT_CAP_BD: max n for B / D / B-minus-D enumeration
    int bernoulli = 128;    // WEYLSTAT_CAP_BERNOULLI: max Bernoulli polynomial index
};

// Caps read from the environment once, first use.
const Caps& caps();

} // namespace weylstat

#endif
