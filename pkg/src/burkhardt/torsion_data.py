"""Order-3 marking data: five (H, lambda, G) triples.

Each triple satisfies d*(G^2 + 4*lambda*H^3) = F for one common binary
sextic F: the first four with d = 1 (labels J1..J4, the rational
j-planes through y0 = 0), the dual one with d = -3 after rescaling
(label J4', the j-plane y0+...+y4 = y0+y4 = 0).  Coefficients are
rational functions in the affine point coordinates a1..a4; X is the
affine coordinate x/z of the binary forms."""

TORSION_TRIPLE_TEXT = [
    (
        '(a1^3*a3*a4^3+a1^2*a2^2*a4^5+a1^2*a2^2*a4^2+2*a1*a2*a3^2*a4^4-a1*a2*a3^2*a'
        '4-a2^3*a3+a3^4*a4^3)*X^2+(a1^4*a4^4+2*a1^2*a2*a3*a4^5-a1^2*a2*a3*a4^2+2*a1'
        '*a2^3*a4^4+a1*a2^3*a4+2*a1*a3^3*a4^4+a1*a3^3*a4+2*a2^2*a3^2*a4^3+2*a2^2*a3'
        '^2)*X+a1^3*a2*a4^3+a1^2*a3^2*a4^5+a1^2*a3^2*a4^2+2*a1*a2^2*a3*a4^4-a1*a2^2'
        '*a3*a4+a2^4*a4^3-a2*a3^3',
        '(-a4^3-1)/(a1^6*a4^6-6*a1^4*a2*a3*a4^4-2*a1^3*a2^3*a4^3-2*a1^3*a3^3*a4^3+9'
        '*a1^2*a2^2*a3^2*a4^2+6*a1*a2^4*a3*a4+6*a1*a2*a3^4*a4+a2^6+2*a2^3*a3^3+a3^6'
        ')',
        '(a1^6*a4^6+3*a1^4*a2*a3*a4^7-3*a1^4*a2*a3*a4^4+2*a1^3*a2^3*a4^9+4*a1^3*a2^'
        '3*a4^6+3*a1^3*a3^3*a4^6+a1^3*a3^3*a4^3+6*a1^2*a2^2*a3^2*a4^8+3*a1^2*a2^2*a'
        '3^2*a4^5+6*a1^2*a2^2*a3^2*a4^2-3*a1*a2^4*a3*a4^4+3*a1*a2^4*a3*a4+6*a1*a2*a'
        '3^4*a4^7+a2^6-3*a2^3*a3^3*a4^3-a2^3*a3^3+2*a3^6*a4^6+a3^6*a4^3)/(a1^3*a4^3'
        '-3*a1*a2*a3*a4-a2^3-a3^3)*X^3+(3*a1^5*a2*a4^8+3*a1^5*a2*a4^5+6*a1^4*a3^2*a'
        '4^7+6*a1^4*a3^2*a4^4+6*a1^3*a2^2*a3*a4^9+6*a1^3*a2^2*a3*a4^6+6*a1^2*a2^4*a'
        '4^8+9*a1^2*a2^4*a4^5+3*a1^2*a2^4*a4^2+12*a1^2*a2*a3^3*a4^8+3*a1^2*a2*a3^3*'
        'a4^5-9*a1^2*a2*a3^3*a4^2+12*a1*a2^3*a3^2*a4^7+9*a1*a2^3*a3^2*a4^4-3*a1*a2^'
        '3*a3^2*a4+6*a1*a3^5*a4^7+6*a1*a3^5*a4^4-3*a2^5*a3*a4^3-3*a2^5*a3+6*a2^2*a3'
        '^4*a4^6+9*a2^2*a3^4*a4^3+3*a2^2*a3^4)/(a1^3*a4^3-3*a1*a2*a3*a4-a2^3-a3^3)*'
        'X^2+(3*a1^5*a3*a4^8+3*a1^5*a3*a4^5+6*a1^4*a2^2*a4^7+6*a1^4*a2^2*a4^4+6*a1^'
        '3*a2*a3^2*a4^9+6*a1^3*a2*a3^2*a4^6+12*a1^2*a2^3*a3*a4^8+3*a1^2*a2^3*a3*a4^'
        '5-9*a1^2*a2^3*a3*a4^2+6*a1^2*a3^4*a4^8+9*a1^2*a3^4*a4^5+3*a1^2*a3^4*a4^2+6'
        '*a1*a2^5*a4^7+6*a1*a2^5*a4^4+12*a1*a2^2*a3^3*a4^7+9*a1*a2^2*a3^3*a4^4-3*a1'
        '*a2^2*a3^3*a4+6*a2^4*a3^2*a4^6+9*a2^4*a3^2*a4^3+3*a2^4*a3^2-3*a2*a3^5*a4^3'
        '-3*a2*a3^5)/(a1^3*a4^3-3*a1*a2*a3*a4-a2^3-a3^3)*X+(a1^6*a4^6+3*a1^4*a2*a3*'
        'a4^7-3*a1^4*a2*a3*a4^4+3*a1^3*a2^3*a4^6+a1^3*a2^3*a4^3+2*a1^3*a3^3*a4^9+4*'
        'a1^3*a3^3*a4^6+6*a1^2*a2^2*a3^2*a4^8+3*a1^2*a2^2*a3^2*a4^5+6*a1^2*a2^2*a3^'
        '2*a4^2+6*a1*a2^4*a3*a4^7-3*a1*a2*a3^4*a4^4+3*a1*a2*a3^4*a4+2*a2^6*a4^6+a2^'
        '6*a4^3-3*a2^3*a3^3*a4^3-a2^3*a3^3+a3^6)/(a1^3*a4^3-3*a1*a2*a3*a4-a2^3-a3^3'
        ')',
    ),
    (
        'a1*a4*X^2+a2*X-a3',
        '-a1^3*a4^9-a1^3*a4^6+3*a1*a2*a3*a4^7+3*a1*a2*a3*a4^4+a2^3*a4^6+a2^3*a4^3+a'
        '3^3*a4^6+a3^3*a4^3',
        '(2*a1^3*a4^6+a1^3*a4^3-3*a1*a2*a3*a4^4+a2^3-a3^3*a4^3)*X^3+(3*a1^2*a2*a4^5'
        '+3*a1^2*a2*a4^2-3*a2^2*a3*a4^3-3*a2^2*a3)*X^2+(-3*a1^2*a3*a4^5-3*a1^2*a3*a'
        '4^2+3*a2*a3^2*a4^3+3*a2*a3^2)*X-a1^3*a4^3-3*a1*a2*a3*a4^4-a2^3*a4^3-2*a3^3'
        '*a4^3-a3^3',
    ),
    (
        'a2*X^2-a3*X-a1*a4',
        'a1^3*a4^9+a1^3*a4^6-3*a1*a2*a3*a4^7-3*a1*a2*a3*a4^4-a2^3*a4^6-a2^3*a4^3-a3'
        '^3*a4^6-a3^3*a4^3',
        '(a1^3*a4^3+3*a1*a2*a3*a4^4+2*a2^3*a4^3+a2^3+a3^3*a4^3)*X^3+(3*a1^2*a2*a4^5'
        '+3*a1^2*a2*a4^2-3*a2^2*a3*a4^3-3*a2^2*a3)*X^2+(-3*a1^2*a3*a4^5-3*a1^2*a3*a'
        '4^2+3*a2*a3^2*a4^3+3*a2*a3^2)*X-2*a1^3*a4^6-a1^3*a4^3+3*a1*a2*a3*a4^4+a2^3'
        '*a4^3-a3^3',
    ),
    (
        '(a1*a2^2*a4^3+a1*a2^2)*X^2+(a1^3*a4^2+a1*a2*a3*a4^3-2*a1*a2*a3+a2^3*a4^2+a'
        '3^3*a4^2)*X+a1*a3^2*a4^3+a1*a3^2',
        '(-a1^3*a4^3+3*a1*a2*a3*a4+a2^3+a3^3)/(a1^6+6*a1^4*a2*a3*a4+2*a1^3*a2^3+2*a'
        '1^3*a3^3+9*a1^2*a2^2*a3^2*a4^2+6*a1*a2^4*a3*a4+6*a1*a2*a3^4*a4+a2^6+2*a2^3'
        '*a3^3+a3^6)',
        '(a1^6*a4^3+6*a1^4*a2*a3*a4^4+2*a1^3*a2^3*a4^6+5*a1^3*a2^3*a4^3+a1^3*a2^3+2'
        '*a1^3*a3^3*a4^3+9*a1^2*a2^2*a3^2*a4^5+3*a1*a2^4*a3*a4^4-3*a1*a2^4*a3*a4+6*'
        'a1*a2*a3^4*a4^4-a2^6+a2^3*a3^3*a4^3-a2^3*a3^3+a3^6*a4^3)/(a1^3+3*a1*a2*a3*'
        'a4+a2^3+a3^3)*X^3+(3*a1^5*a2*a4^5+3*a1^5*a2*a4^2+3*a1^3*a2^2*a3*a4^6-3*a1^'
        '3*a2^2*a3+3*a1^2*a2^4*a4^5+3*a1^2*a2^4*a4^2+3*a1^2*a2*a3^3*a4^5+3*a1^2*a2*'
        'a3^3*a4^2+9*a1*a2^3*a3^2*a4^4+9*a1*a2^3*a3^2*a4+3*a2^5*a3*a4^3+3*a2^5*a3+3'
        '*a2^2*a3^4*a4^3+3*a2^2*a3^4)/(a1^3+3*a1*a2*a3*a4+a2^3+a3^3)*X^2+(-3*a1^5*a'
        '3*a4^5-3*a1^5*a3*a4^2-3*a1^3*a2*a3^2*a4^6+3*a1^3*a2*a3^2-3*a1^2*a2^3*a3*a4'
        '^5-3*a1^2*a2^3*a3*a4^2-3*a1^2*a3^4*a4^5-3*a1^2*a3^4*a4^2-9*a1*a2^2*a3^3*a4'
        '^4-9*a1*a2^2*a3^3*a4-3*a2^4*a3^2*a4^3-3*a2^4*a3^2-3*a2*a3^5*a4^3-3*a2*a3^5'
        ')/(a1^3+3*a1*a2*a3*a4+a2^3+a3^3)*X+(-a1^6*a4^3-6*a1^4*a2*a3*a4^4-2*a1^3*a2'
        '^3*a4^3-2*a1^3*a3^3*a4^6-5*a1^3*a3^3*a4^3-a1^3*a3^3-9*a1^2*a2^2*a3^2*a4^5-'
        '6*a1*a2^4*a3*a4^4-3*a1*a2*a3^4*a4^4+3*a1*a2*a3^4*a4-a2^6*a4^3-a2^3*a3^3*a4'
        '^3+a2^3*a3^3+a3^6)/(a1^3+3*a1*a2*a3*a4+a2^3+a3^3)',
    ),
]

TORSION_DUAL_TEXT = (
    '(a1^2*a4^2+a1*a2*a4^3-a1*a2*a4^2-a1*a2*a4-a1*a3*a4^2+a2^2+a2*a3*a4+a3^2*a4'
    '^2)*X^2+(-a1^2*a4^3+a1^2*a4^2+a1*a2*a4^3+a1*a2*a4+a1*a3*a4^3+a1*a3*a4+a2^2'
    '*a4^2-a2^2*a4-2*a2*a3+a3^2*a4^2-a3^2*a4)*X+a1^2*a4^2-a1*a2*a4^2+a1*a3*a4^3'
    '-a1*a3*a4^2-a1*a3*a4+a2^2*a4^2+a2*a3*a4+a3^2',
    '(-3*a1^2*a4^4+3*a1^2*a4^3-3*a1^2*a4^2-3*a1*a2*a4^3+3*a1*a2*a4^2-3*a1*a2*a4'
    '-3*a1*a3*a4^3+3*a1*a3*a4^2-3*a1*a3*a4-3*a2^2*a4^2+3*a2^2*a4-3*a2^2+3*a2*a3'
    '*a4^2-3*a2*a3*a4+3*a2*a3-3*a3^2*a4^2+3*a3^2*a4-3*a3^2)/(a1^2*a4^4+2*a1^2*a'
    '4^3+a1^2*a4^2-2*a1*a2*a4^3-4*a1*a2*a4^2-2*a1*a2*a4-2*a1*a3*a4^3-4*a1*a3*a4'
    '^2-2*a1*a3*a4+a2^2*a4^2+2*a2^2*a4+a2^2+2*a2*a3*a4^2+4*a2*a3*a4+2*a2*a3+a3^'
    '2*a4^2+2*a3^2*a4+a3^2)',
    '(-3*a1^4*a4^5+3*a1^4*a4^4-6*a1^3*a2*a4^6+6*a1^3*a2*a4^5-3*a1^3*a2*a4^4-3*a'
    '1^3*a2*a4^3+6*a1^3*a3*a4^5-3*a1^3*a3*a4^4+3*a1^3*a3*a4^3+6*a1^2*a2^2*a4^6+'
    '6*a1^2*a2^2*a4^4+6*a1^2*a2^2*a4^2+3*a1^2*a2*a3*a4^6-3*a1^2*a2*a3*a4^5+6*a1'
    '^2*a2*a3*a4^4+6*a1^2*a2*a3*a4^3-6*a1^2*a2*a3*a4^2-6*a1^2*a3^2*a4^5+6*a1^2*'
    'a3^2*a4^4-6*a1^2*a3^2*a4^3-6*a1*a2^3*a4^4+6*a1*a2^3*a4^3-3*a1*a2^3*a4^2-3*'
    'a1*a2^3*a4-3*a1*a2^2*a3*a4^5+3*a1*a2^2*a3*a4^4-6*a1*a2^2*a3*a4^3-6*a1*a2^2'
    '*a3*a4^2+6*a1*a2^2*a3*a4+9*a1*a2*a3^2*a4^5-3*a1*a2*a3^2*a4^4-6*a1*a2*a3^2*'
    'a4^3+6*a1*a2*a3^2*a4^2+3*a1*a3^3*a4^5-3*a1*a3^3*a4^4+6*a1*a3^3*a4^3-3*a2^4'
    '*a4+3*a2^4-6*a2^3*a3*a4^2+3*a2^3*a3*a4-3*a2^3*a3-6*a2^2*a3^2*a4^3+6*a2^2*a'
    '3^2*a4^2-6*a2^2*a3^2*a4-3*a2*a3^3*a4^4+3*a2*a3^3*a4^3-6*a2*a3^3*a4^2+3*a3^'
    '4*a4^4-3*a3^4*a4^3)/(a1*a4^2+a1*a4-a2*a4-a2-a3*a4-a3)*X^3+(6*a1^4*a4^6-6*a'
    '1^4*a4^5+6*a1^4*a4^4+3*a1^3*a2*a4^7-9*a1^3*a2*a4^6+12*a1^3*a2*a4^5-9*a1^3*'
    'a2*a4^4+3*a1^3*a2*a4^3-6*a1^3*a3*a4^6+12*a1^3*a3*a4^5-12*a1^3*a3*a4^4+6*a1'
    '^3*a3*a4^3+3*a1^2*a2^2*a4^6-15*a1^2*a2^2*a4^5+18*a1^2*a2^2*a4^4-15*a1^2*a2'
    '^2*a4^3+3*a1^2*a2^2*a4^2+9*a1^2*a2*a3*a4^6-9*a1^2*a2*a3*a4^5+9*a1^2*a2*a3*'
    'a4^3-9*a1^2*a2*a3*a4^2+6*a1^2*a3^2*a4^6-12*a1^2*a3^2*a4^5+18*a1^2*a3^2*a4^'
    '4-12*a1^2*a3^2*a4^3+6*a1^2*a3^2*a4^2+12*a1*a2^3*a4^5-6*a1*a2^3*a4^4+12*a1*'
    'a2^3*a4^3+6*a1*a2^3*a4+3*a1*a2^2*a3*a4^5+3*a1*a2^2*a3*a4^4+3*a1*a2^2*a3*a4'
    '^2+3*a1*a2^2*a3*a4+6*a1*a2*a3^2*a4^5-12*a1*a2*a3^2*a4^4+6*a1*a2*a3^2*a4^2-'
    '12*a1*a2*a3^2*a4+6*a1*a3^3*a4^5-12*a1*a3^3*a4^4+12*a1*a3^3*a4^3-6*a1*a3^3*'
    'a4^2-6*a2^4*a4^3+6*a2^4*a4^2-6*a2^4*a4-3*a2^3*a3*a4^4+3*a2^3*a3*a4^3-12*a2'
    '^3*a3*a4^2+9*a2^3*a3*a4-9*a2^3*a3+9*a2^2*a3^2*a4^4-9*a2^2*a3^2*a4^3+18*a2^'
    '2*a3^2*a4^2-9*a2^2*a3^2*a4+9*a2^2*a3^2+12*a2*a3^3*a4^3-12*a2*a3^3*a4^2+12*'
    'a2*a3^3*a4+6*a3^4*a4^4-6*a3^4*a4^3+6*a3^4*a4^2)/(a1*a4^2+a1*a4-a2*a4-a2-a3'
    '*a4-a3)*X^2+(6*a1^4*a4^6-6*a1^4*a4^5+6*a1^4*a4^4-6*a1^3*a2*a4^6+12*a1^3*a2'
    '*a4^5-12*a1^3*a2*a4^4+6*a1^3*a2*a4^3+3*a1^3*a3*a4^7-9*a1^3*a3*a4^6+12*a1^3'
    '*a3*a4^5-9*a1^3*a3*a4^4+3*a1^3*a3*a4^3+6*a1^2*a2^2*a4^6-12*a1^2*a2^2*a4^5+'
    '18*a1^2*a2^2*a4^4-12*a1^2*a2^2*a4^3+6*a1^2*a2^2*a4^2+9*a1^2*a2*a3*a4^6-9*a'
    '1^2*a2*a3*a4^5+9*a1^2*a2*a3*a4^3-9*a1^2*a2*a3*a4^2+3*a1^2*a3^2*a4^6-15*a1^'
    '2*a3^2*a4^5+18*a1^2*a3^2*a4^4-15*a1^2*a3^2*a4^3+3*a1^2*a3^2*a4^2+6*a1*a2^3'
    '*a4^5-12*a1*a2^3*a4^4+12*a1*a2^3*a4^3-6*a1*a2^3*a4^2+6*a1*a2^2*a3*a4^5-12*'
    'a1*a2^2*a3*a4^4+6*a1*a2^2*a3*a4^2-12*a1*a2^2*a3*a4+3*a1*a2*a3^2*a4^5+3*a1*'
    'a2*a3^2*a4^4+3*a1*a2*a3^2*a4^2+3*a1*a2*a3^2*a4+12*a1*a3^3*a4^5-6*a1*a3^3*a'
    '4^4+12*a1*a3^3*a4^3+6*a1*a3^3*a4+6*a2^4*a4^4-6*a2^4*a4^3+6*a2^4*a4^2+12*a2'
    '^3*a3*a4^3-12*a2^3*a3*a4^2+12*a2^3*a3*a4+9*a2^2*a3^2*a4^4-9*a2^2*a3^2*a4^3'
    '+18*a2^2*a3^2*a4^2-9*a2^2*a3^2*a4+9*a2^2*a3^2-3*a2*a3^3*a4^4+3*a2*a3^3*a4^'
    '3-12*a2*a3^3*a4^2+9*a2*a3^3*a4-9*a2*a3^3-6*a3^4*a4^3+6*a3^4*a4^2-6*a3^4*a4'
    ')/(a1*a4^2+a1*a4-a2*a4-a2-a3*a4-a3)*X+(-3*a1^4*a4^5+3*a1^4*a4^4+6*a1^3*a2*'
    'a4^5-3*a1^3*a2*a4^4+3*a1^3*a2*a4^3-6*a1^3*a3*a4^6+6*a1^3*a3*a4^5-3*a1^3*a3'
    '*a4^4-3*a1^3*a3*a4^3-6*a1^2*a2^2*a4^5+6*a1^2*a2^2*a4^4-6*a1^2*a2^2*a4^3+3*'
    'a1^2*a2*a3*a4^6-3*a1^2*a2*a3*a4^5+6*a1^2*a2*a3*a4^4+6*a1^2*a2*a3*a4^3-6*a1'
    '^2*a2*a3*a4^2+6*a1^2*a3^2*a4^6+6*a1^2*a3^2*a4^4+6*a1^2*a3^2*a4^2+3*a1*a2^3'
    '*a4^5-3*a1*a2^3*a4^4+6*a1*a2^3*a4^3+9*a1*a2^2*a3*a4^5-3*a1*a2^2*a3*a4^4-6*'
    'a1*a2^2*a3*a4^3+6*a1*a2^2*a3*a4^2-3*a1*a2*a3^2*a4^5+3*a1*a2*a3^2*a4^4-6*a1'
    '*a2*a3^2*a4^3-6*a1*a2*a3^2*a4^2+6*a1*a2*a3^2*a4-6*a1*a3^3*a4^4+6*a1*a3^3*a'
    '4^3-3*a1*a3^3*a4^2-3*a1*a3^3*a4+3*a2^4*a4^4-3*a2^4*a4^3-3*a2^3*a3*a4^4+3*a'
    '2^3*a3*a4^3-6*a2^3*a3*a4^2-6*a2^2*a3^2*a4^3+6*a2^2*a3^2*a4^2-6*a2^2*a3^2*a'
    '4-6*a2*a3^3*a4^2+3*a2*a3^3*a4-3*a2*a3^3-3*a3^4*a4+3*a3^4)/(a1*a4^2+a1*a4-a'
    '2*a4-a2-a3*a4-a3)',
)
