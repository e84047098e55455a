"""Two-term diatomic potential: closed-form spectrum, wave functions and SU(1,1) ladder operators."""
