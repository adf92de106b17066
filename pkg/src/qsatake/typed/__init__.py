"""Type D: even quadrics and spinor varieties via so(2n)."""
