"""Printed centralizer elements and special classes for E6 and E7.

Roots are written relative to theta (sum of simple roots) and psi (highest
root); words are reduced words in the simple reflections (rightmost acts
first on the highest weight).  E6 data use the numbering of roots.py.
"""

Y_PRINTED = {
    "E6": {
        1: [(1, "a1"), (1, "a2"), (1, "a3"), (1, "a4"), (1, "a5"), (1, "a6")],
        4: [(1, "theta-a2-a6"), (1, "theta-a1-a3"), (1, "theta-a1-a2"), (-1, "theta-a5-a6")],
        5: [(1, "psi-theta"), (-2, "theta-a2"), (1, "theta-a6"), (-1, "theta-a1")],
        7: [(1, "theta+a4"), (-1, "theta+a4+a3-a6"), (1, "theta+a4+a5-a1")],
        8: [(1, "theta+a4+a5"), (-1, "theta+a3+a4")],
        11: [(1, "psi")],
    },
    "E7": {
        1: [(1, "a%d" % i) for i in range(1, 8)],
        5: [(2, "theta-a1-a5"), (2, "theta-a5-a7"), (-1, "theta-a1-a7"), (1, "theta-a1-a2"),
            (-1, "theta-a1-a2-a7+a4"), (-3, "theta-a6-a7")],
        7: [(2, "theta"), (-1, "theta+a4-a7"), (1, "theta+a4-a1"), (-1, "theta-a1-a2+a4+a5"),
            (1, "theta-a1-a7+a3+a4")],
        9: [(1, "theta+a3+a4"), (-1, "theta+a4+a5"), (1, "theta+a2+a3+a4-a7")],
        11: [(1, "theta+a3+2a4+a5"), (-1, "theta+a2+a3+a4+a6"), (1, "theta-a1+a3+2a4+a5+a6")],
        13: [(1, "theta+a2+a3+2a4+a5+a6"), (-1, "theta+a2+2a3+2a4+a6")],
        17: [(1, "psi")],
    },
}

P_PRINTED = {
    "E6": {
        1: [(1, "1")],
        4: [(1, "5431"), (-1, "2431")],
        5: [(1, "52431"), (-2, "65431")],
        7: [(1, "4265431"), (-1, "3452431")],
        8: [(1, "54265431"), (-1, "34265431")],
        11: [(1, "24354265431")],
    },
    "E7": {
        1: [(1, "1")],
        5: [(3, "54321"), (-2, "64321")],
        7: [(2, "7564321"), (-1, "4564321")],
        9: [(1, "647564321"), (-1, "347564321"), (1, "234564321")],
        11: [(1, "43647564321"), (-1, "23647564321")],
        13: [(1, "3243647564321"), (-1, "2543647564321")],
        17: [(1, "432543647564321")],
    },
}
