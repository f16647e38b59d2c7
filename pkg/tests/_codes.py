# Diagram codes shared by the test modules.

TREFOIL = "X+ 1 4 2 5 ; X+ 3 6 4 1 ; X+ 5 2 6 3"
HOPF = "X+ 1 3 2 4 ; X+ 3 1 4 2"
FIG8 = "X- 8 5 1 6 ; X- 4 1 5 2 ; X+ 2 8 3 7 ; X+ 6 4 7 3"
FIG8_GAUSS = "(O2- U3+ O4+ U2- O1- U4+ O3+ U1-)"
BORROMEAN = "X- 5 4 6 1 ; X- 1 12 2 9 ; X+ 7 3 8 2 ; X+ 3 11 4 10 ; X- 9 8 10 5 ; X+ 11 7 12 6"
SOLOMON = "X+ 5 1 6 4 ; X+ 1 7 2 6 ; X+ 7 3 8 2 ; X+ 3 5 4 8"  # (2,4) torus link
# trefoil with crossing 2 switched: a non-alternating diagram
TREFOIL_FLIPPED_GAUSS = "(O1+ O2- O3+ U1+ U2- U3+)"
TREFOIL_GAUSS = "(O1+ U2+ O3+ U1+ O2+ U3+)"
# two trefoils joined through one nugatory crossing (7)
NUGATORY7_GAUSS = "(O1+ U2+ O3+ U1+ O2+ U3+ O7+ U4+ O5+ U6+ O4+ U5+ O6+ U7+)"
SPLIT_TREFOILS = "X+ 1 4 2 5 ; X+ 3 6 4 1 ; X+ 5 2 6 3 ; X+ 11 14 12 15 ; X+ 13 16 14 11 ; X+ 15 12 16 13"
SPLIT_TREFOIL_HOPF = "X+ 1 4 2 5 ; X+ 3 6 4 1 ; X+ 5 2 6 3 ; X+ 21 23 22 24 ; X+ 23 21 24 22"
