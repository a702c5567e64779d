"""The F_{16^13} / F_16 instance on y^2 + y = x^5, in instance-file form."""

INSTANCE_TEXT = """\
ccma-instance v1
# F_{16^13} over F_16 on the genus-2 curve y^2 + y = x^5
q 16
base-poly 1 1 0 0 1
n 13
g 2
curve y2+y=x^5
Q 9 c 5 e 4 b 0 b f 1 e 6 c 1
D 2 8 1 1 9 7 b c 7 f e b c a 1
beta d 5 4 0 6 a 5 2 5 d 2 d c
# rational points; index 1 is the point at infinity, then P_2 .. P_33
point-inf
point 0 0
point 0 1
point 2 2
point 2 3
point 4 4
point 4 5
point 8 6
point 8 7
point 3 2
point 3 3
point 6 4
point 6 5
point c 6
point c 7
point b 2
point b 3
point 5 4
point 5 5
point a 6
point a 7
point 7 2
point 7 3
point e 4
point e 5
point f 6
point f 7
point d 2
point d 3
point 9 4
point 9 5
point 1 6
point 1 7
eval-points 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28
LD 1 e e 2 1 e 5 e 9 7 8 7 d | 0 3 f 6 d 1 6 2 f d 5 1 a f f
LD 2 b 0 0 b 3 4 e 9 2 1 6 e | f 4 d 9 d e f a 7 b 8 2 f b 5
LD 3 3 0 8 f 3 4 9 4 1 5 5 3 | 0 5 4 d b 2 b 8 b e a 2 c b 2
LD 4 e a d c 4 0 c a 5 4 d 6 | f 3 2 b e 4 e 4 6 8 e c 6 f 8
LD 5 c 2 9 d 2 1 f d 2 4 0 3 | 8 6 c e e 4 9 3 a f 8 f 1 7 e
LD 6 1 0 5 d 1 c 0 5 b 7 f c | e 4 5 b a c 2 d 6 b 4 3 1 3 7
LD 7 a 3 1 8 8 9 f 7 2 2 6 1 | e 0 e 9 3 c d 8 6 c c 3 5 8 b
LD 8 8 d 2 1 e 2 3 0 1 f c c | 2 2 b a 7 7 0 7 d 5 b a 9 b a
LD 9 e 1 4 e 3 9 d 0 9 d f 1 | 3 c d 1 f 6 e e 8 c 2 6 6 9 1
LD 10 f b 9 c 3 6 6 a 2 3 6 6 | d c f c e 6 1 1 9 0 a 7 0 b 4
LD 11 a 1 5 c 8 e a b e d 9 9 | 7 e a 0 4 0 2 c f 7 7 6 6 3 f
LD 12 f 2 8 e 1 9 0 2 8 4 a 5 | 8 7 9 a 0 c 7 0 8 e 3 9 5 d d
LD 13 3 1 8 0 6 b 7 2 6 1 6 f | 0 2 5 4 6 4 d 9 6 0 a b 9 a 3
KER 14 a 1 5 1 9 f a 5 3 5 0 8 f 1 f c 7 c a 4 9 b 4 b d | 5 e 6 9 6 c 6 e 2 0 a 7 a 4 e f 2 a b 0 5 3 9 7 0 2 b
KER 15 0 a 1 5 1 9 f a 5 3 5 0 8 f 1 f c 7 c a 4 9 b 4 b d | 0 5 e 6 9 6 c 6 e 2 0 a 7 a 4 e f 2 a b 0 5 3 9 7 0 2 b
KER 16 2 3 3 0 6 1 7 5 3 7 9 8 7 a 6 3 c 9 2 6 1 3 e a 7 b | b 1 6 a 2 7 f 4 e 8 6 4 9 a 4 5 5 2 3 e 5 0 f 1 d e 3 2
KER 17 7 f 6 9 d 6 7 f 0 4 f 2 b 0 f 1 e 8 d a 4 2 0 4 7 7 | 2 1 c 8 4 4 2 0 b 7 6 8 9 2 c e 7 e 8 d 8 5 8 8 f 8 3 3
KER 18 d 5 1 9 b d 3 b 1 d 8 8 9 6 e 2 3 8 e 1 9 f 9 f 6 7 | 3 d 3 5 1 1 a 3 1 f e f a e 7 3 d 0 1 1 8 8 9 5 1 1 a 3
KER 19 d f b e b b 8 f 5 c 1 f 3 4 8 3 0 5 e 2 2 2 4 6 d 6 | 3 c f a c 4 f b 2 5 6 7 d d b 8 0 a f 8 4 8 4 4 c f 3 a
KER 20 5 3 3 0 0 b 3 a 3 0 e 7 b 6 8 d d 1 4 c b 6 6 f 8 d | 9 8 2 5 0 4 8 8 c d f c 9 b 5 0 1 6 1 5 0 4 a 1 e 0 1 3 3
KER 21 3 2 a 1 f 4 d 1 8 1 7 2 8 4 2 1 d 8 0 6 2 e 4 d d 5 | d d 4 9 5 4 a 4 f 0 b 6 e 5 5 a 9 3 1 6 2 c 9 a 9 7 b 4
KER 22 e a 8 d 8 f 8 e b 6 2 2 4 6 e c 8 5 0 3 2 4 8 3 4 d | 4 a 4 b 6 9 e 7 9 e f 4 f b 9 2 e c 4 e a 2 f 7 5 3 e b
KER 23 2 d 3 9 e 8 1 2 7 9 c f 5 6 f c f d 0 a 8 5 3 9 0 4 | b 5 9 0 f 8 0 6 f f a b 7 2 5 8 9 3 d 0 0 a 8 d 3 c 0 e
KER 24 6 7 5 0 c e 9 c a 1 4 8 6 3 e 9 9 0 2 d 4 1 c 0 c | e 8 0 5 c e 0 b d 5 3 6 e 3 3 6 6 d 0 1 1 0 7 e 1 b 9
KER 25 0 6 7 5 0 c e 9 c a 1 4 8 6 3 e 9 9 0 2 d 4 1 c 0 c | 0 e 8 0 5 c e 0 b d 5 3 6 e 3 3 6 6 d 0 1 1 0 7 e 1 b 9
KER 26 a f d 2 a 0 f a 2 6 e d c 2 d 9 1 b b 4 3 5 c 4 3 | 1 5 1 f 7 6 7 0 e 6 a 2 c a d 6 2 a 3 a 3 1 5 a 0 5 e b 8
KER 27 5 7 0 1 b f 8 5 7 d c a 9 6 6 0 d 7 9 f 2 c 9 1 1 4 | 9 d 9 c e f 8 1 6 3 4 8 0 1 3 d 2 5 a e 6 e 0 3 c 3 1 1 c
"""
