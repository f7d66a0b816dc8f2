TORSION_TRIPLE_TEXT = [
    (
        '(a1^3*a3*a4^3+a1^2*a2^2*a4^5+a1^2*a2^2*a4^2+2*a1*a2*a3^2*a4^4-a1*a2*a3^2*a4-a2^3*a3+a3^4*a4^3)*X^2+(a1^4*a4^4+2*a1^2*a2*a3*a4^5-a1^2*a2*a3*a4^2+2*a1*a2^3*a4^4+a1*a2^3*a4+2*a1*a3^3*a4^4+a1*a3^3*a4+2*a2^2*a3^2*a4^3+2*a2^2*a3^2)*X+a1^3*a2*a4^3+a1^2*a3^2*a4^5+a1^2*a3^2*a4^2+2*a1*a2^2*a3*a4^4-a1*a2^2*a3*a4+a2^4*a4^3-a2*a3^3',
        '(-a4^3-1)/(a1^6*a4^6-6*a1^4*a2*a3*a4^4-2*a1^3*a2^3*a4^3-2*a1^3*a3^3*a4^3+9*a1^2*a2^2*a3^2*a4^2+6*a1*a2^4*a3*a4+6*a1*a2*a3^4*a4+a2^6+2*a2^3*a3^3+a3^6)',
        '(a1^6*a4^6+3*a1^4*a2*a3*a4^7-3*a1^4*a2*a3*a4^4+2*a1^3*a2^3*a4^9+4*a1^3*a2^3*a4^6+3*a1^3*a3^3*a4^6+a1^3*a3^3*a4^3+6*a1^2*a2^2*a3^2*a4^8+3*a1^2*a2^2*a3^2*a4^5+6*a1^2*a2^2*a3^2*a4^2-3*a1*a2^4*a3*a4^4+3*a1*a2^4*a3*a4+6*a1*a2*a3^4*a4^7+a2^6-3*a2^3*a3^3*a4^3-a2^3*a3^3+2*a3^6*a4^6+a3^6*a4^3)/(a1^3*a4^3-3*a1*a2*a3*a4-a2^3-a3^3)*X^3+(3*a1^5*a2*a4^8+3*a1^5*a2*a4^5+6*a1^4*a3^2*a4^7+6*a1^4*a3^2*a4^4+6*a1^3*a2^2*a3*a4^9+6*a1^3*a2^2*a3*a4^6+6*a1^2*a2^4*a4^8+9*a1^2*a2^4*a4^5+3*a1^2*a2^4*a4^2+12*a1^2*a2*a3^3*a4^8+3*a1^2*a2*a3^3*a4^5-9*a1^2*a2*a3^3*a4^2+12*a1*a2^3*a3^2*a4^7+9*a1*a2^3*a3^2*a4^4-3*a1*a2^3*a3^2*a4+6*a1*a3^5*a4^7+6*a1*a3^5*a4^4-3*a2^5*a3*a4^3-3*a2^5*a3+6*a2^2*a3^4*a4^6+9*a2^2*a3^4*a4^3+3*a2^2*a3^4)/(a1^3*a4^3-3*a1*a2*a3*a4-a2^3-a3^3)*X^2+(3*a1^5*a3*a4^8+3*a1^5*a3*a4^5+6*a1^4*a2^2*a4^7+6*a1^4*a2^2*a4^4+6*a1^3*a2*a3^2*a4^9+6*a1^3*a2*a3^2*a4^6+12*a1^2*a2^3*a3*a4^8+3*a1^2*a2^3*a3*a4^5-9*a1^2*a2^3*a3*a4^2+6*a1^2*a3^4*a4^8+9*a1^2*a3^4*a4^5+3*a1^2*a3^4*a4^2+6*a1*a2^5*a4^7+6*a1*a2^5*a4^4+12*a1*a2^2*a3^3*a4^7+9*a1*a2^2*a3^3*a4^4-3*a1*a2^2*a3^3*a4+6*a2^4*a3^2*a4^6+9*a2^4*a3^2*a4^3+3*a2^4*a3^2-3*a2*a3^5*a4^3-3*a2*a3^5)/(a1^3*a4^3-3*a1*a2*a3*a4-a2^3-a3^3)*X+(a1^6*a4^6+3*a1^4*a2*a3*a4^7-3*a1^4*a2*a3*a4^4+3*a1^3*a2^3*a4^6+a1^3*a2^3*a4^3+2*a1^3*a3^3*a4^9+4*a1^3*a3^3*a4^6+6*a1^2*a2^2*a3^2*a4^8+3*a1^2*a2^2*a3^2*a4^5+6*a1^2*a2^2*a3^2*a4^2+6*a1*a2^4*a3*a4^7-3*a1*a2*a3^4*a4^4+3*a1*a2*a3^4*a4+2*a2^6*a4^6+a2^6*a4^3-3*a2^3*a3^3*a4^3-a2^3*a3^3+a3^6)/(a1^3*a4^3-3*a1*a2*a3*a4-a2^3-a3^3)',
    ),
    (
        'a1*a4*X^2+a2*X-a3',
        '-a1^3*a4^9-a1^3*a4^6+3*a1*a2*a3*a4^7+3*a1*a2*a3*a4^4+a2^3*a4^6+a2^3*a4^3+a3^3*a4^6+a3^3*a4^3',
        '(2*a1^3*a4^6+a1^3*a4^3-3*a1*a2*a3*a4^4+a2^3-a3^3*a4^3)*X^3+(3*a1^2*a2*a4^5+3*a1^2*a2*a4^2-3*a2^2*a3*a4^3-3*a2^2*a3)*X^2+(-3*a1^2*a3*a4^5-3*a1^2*a3*a4^2+3*a2*a3^2*a4^3+3*a2*a3^2)*X-a1^3*a4^3-3*a1*a2*a3*a4^4-a2^3*a4^3-2*a3^3*a4^3-a3^3',
    ),
    (
        'a2*X^2-a3*X-a1*a4',
        'a1^3*a4^9+a1^3*a4^6-3*a1*a2*a3*a4^7-3*a1*a2*a3*a4^4-a2^3*a4^6-a2^3*a4^3-a3^3*a4^6-a3^3*a4^3',
        '(a1^3*a4^3+3*a1*a2*a3*a4^4+2*a2^3*a4^3+a2^3+a3^3*a4^3)*X^3+(3*a1^2*a2*a4^5+3*a1^2*a2*a4^2-3*a2^2*a3*a4^3-3*a2^2*a3)*X^2+(-3*a1^2*a3*a4^5-3*a1^2*a3*a4^2+3*a2*a3^2*a4^3+3*a2*a3^2)*X-2*a1^3*a4^6-a1^3*a4^3+3*a1*a2*a3*a4^4+a2^3*a4^3-a3^3',
    ),
    (
        '(a1*a2^2*a4^3+a1*a2^2)*X^2+(a1^3*a4^2+a1*a2*a3*a4^3-2*a1*a2*a3+a2^3*a4^2+a3^3*a4^2)*X+a1*a3^2*a4^3+a1*a3^2',
        '(-a1^3*a4^3+3*a1*a2*a3*a4+a2^3+a3^3)/(a1^6+6*a1^4*a2*a3*a4+2*a1^3*a2^3+2*a1^3*a3^3+9*a1^2*a2^2*a3^2*a4^2+6*a1*a2^4*a3*a4+6*a1*a2*a3^4*a4+a2^6+2*a2^3*a3^3+a3^6)',
        '(a1^6*a4^3+6*a1^4*a2*a3*a4^4+2*a1^3*a2^3*a4^6+5*a1^3*a2^3*a4^3+a1^3*a2^3+2*a1^3*a3^3*a4^3+9*a1^2*a2^2*a3^2*a4^5+3*a1*a2^4*a3*a4^4-3*a1*a2^4*a3*a4+6*a1*a2*a3^4*a4^4-a2^6+a2^3*a3^3*a4^3-a2^3*a3^3+a3^6*a4^3)/(a1^3+3*a1*a2*a3*a4+a2^3+a3^3)*X^3+(3*a1^5*a2*a4^5+3*a1^5*a2*a4^2+3*a1^3*a2^2*a3*a4^6-3*a1^3*a2^2*a3+3*a1^2*a2^4*a4^5+3*a1^2*a2^4*a4^2+3*a1^2*a2*a3^3*a4^5+3*a1^2*a2*a3^3*a4^2+9*a1*a2^3*a3^2*a4^4+9*a1*a2^3*a3^2*a4+3*a2^5*a3*a4^3+3*a2^5*a3+3*a2^2*a3^4*a4^3+3*a2^2*a3^4)/(a1^3+3*a1*a2*a3*a4+a2^3+a3^3)*X^2+(-3*a1^5*a3*a4^5-3*a1^5*a3*a4^2-3*a1^3*a2*a3^2*a4^6+3*a1^3*a2*a3^2-3*a1^2*a2^3*a3*a4^5-3*a1^2*a2^3*a3*a4^2-3*a1^2*a3^4*a4^5-3*a1^2*a3^4*a4^2-9*a1*a2^2*a3^3*a4^4-9*a1*a2^2*a3^3*a4-3*a2^4*a3^2*a4^3-3*a2^4*a3^2-3*a2*a3^5*a4^3-3*a2*a3^5)/(a1^3+3*a1*a2*a3*a4+a2^3+a3^3)*X+(-a1^6*a4^3-6*a1^4*a2*a3*a4^4-2*a1^3*a2^3*a4^3-2*a1^3*a3^3*a4^6-5*a1^3*a3^3*a4^3-a1^3*a3^3-9*a1^2*a2^2*a3^2*a4^5-6*a1*a2^4*a3*a4^4-3*a1*a2*a3^4*a4^4+3*a1*a2*a3^4*a4-a2^6*a4^3-a2^3*a3^3*a4^3+a2^3*a3^3+a3^6)/(a1^3+3*a1*a2*a3*a4+a2^3+a3^3)',
    ),
]

TORSION_DUAL_TEXT = (
    '(a1^2*a4^2+a1*a2*a4^3-a1*a2*a4^2-a1*a2*a4-a1*a3*a4^2+a2^2+a2*a3*a4+a3^2*a4^2)*X^2+(-a1^2*a4^3+a1^2*a4^2+a1*a2*a4^3+a1*a2*a4+a1*a3*a4^3+a1*a3*a4+a2^2*a4^2-a2^2*a4-2*a2*a3+a3^2*a4^2-a3^2*a4)*X+a1^2*a4^2-a1*a2*a4^2+a1*a3*a4^3-a1*a3*a4^2-a1*a3*a4+a2^2*a4^2+a2*a3*a4+a3^2',
    '(-3*a1^2*a4^4+3*a1^2*a4^3-3*a1^2*a4^2-3*a1*a2*a4^3+3*a1*a2*a4^2-3*a1*a2*a4-3*a1*a3*a4^3+3*a1*a3*a4^2-3*a1*a3*a4-3*a2^2*a4^2+3*a2^2*a4-3*a2^2+3*a2*a3*a4^2-3*a2*a3*a4+3*a2*a3-3*a3^2*a4^2+3*a3^2*a4-3*a3^2)/(a1^2*a4^4+2*a1^2*a4^3+a1^2*a4^2-2*a1*a2*a4^3-4*a1*a2*a4^2-2*a1*a2*a4-2*a1*a3*a4^3-4*a1*a3*a4^2-2*a1*a3*a4+a2^2*a4^2+2*a2^2*a4+a2^2+2*a2*a3*a4^2+4*a2*a3*a4+2*a2*a3+a3^2*a4^2+2*a3^2*a4+a3^2)',
    '(-3*a1^4*a4^5+3*a1^4*a4^4-6*a1^3*a2*a4^6+6*a1^3*a2*a4^5-3*a1^3*a2*a4^4-3*a1^3*a2*a4^3+6*a1^3*a3*a4^5-3*a1^3*a3*a4^4+3*a1^3*a3*a4^3+6*a1^2*a2^2*a4^6+6*a1^2*a2^2*a4^4+6*a1^2*a2^2*a4^2+3*a1^2*a2*a3*a4^6-3*a1^2*a2*a3*a4^5+6*a1^2*a2*a3*a4^4+6*a1^2*a2*a3*a4^3-6*a1^2*a2*a3*a4^2-6*a1^2*a3^2*a4^5+6*a1^2*a3^2*a4^4-6*a1^2*a3^2*a4^3-6*a1*a2^3*a4^4+6*a1*a2^3*a4^3-3*a1*a2^3*a4^2-3*a1*a2^3*a4-3*a1*a2^2*a3*a4^5+3*a1*a2^2*a3*a4^4-6*a1*a2^2*a3*a4^3-6*a1*a2^2*a3*a4^2+6*a1*a2^2*a3*a4+9*a1*a2*a3^2*a4^5-3*a1*a2*a3^2*a4^4-6*a1*a2*a3^2*a4^3+6*a1*a2*a3^2*a4^2+3*a1*a3^3*a4^5-3*a1*a3^3*a4^4+6*a1*a3^3*a4^3-3*a2^4*a4+3*a2^4-6*a2^3*a3*a4^2+3*a2^3*a3*a4-3*a2^3*a3-6*a2^2*a3^2*a4^3+6*a2^2*a3^2*a4^2-6*a2^2*a3^2*a4-3*a2*a3^3*a4^4+3*a2*a3^3*a4^3-6*a2*a3^3*a4^2+3*a3^4*a4^4-3*a3^4*a4^3)/(a1*a4^2+a1*a4-a2*a4-a2-a3*a4-a3)*X^3+(6*a1^4*a4^6-6*a1^4*a4^5+6*a1^4*a4^4+3*a1^3*a2*a4^7-9*a1^3*a2*a4^6+12*a1^3*a2*a4^5-9*a1^3*a2*a4^4+3*a1^3*a2*a4^3-6*a1^3*a3*a4^6+12*a1^3*a3*a4^5-12*a1^3*a3*a4^4+6*a1^3*a3*a4^3+3*a1^2*a2^2*a4^6-15*a1^2*a2^2*a4^5+18*a1^2*a2^2*a4^4-15*a1^2*a2^2*a4^3+3*a1^2*a2^2*a4^2+9*a1^2*a2*a3*a4^6-9*a1^2*a2*a3*a4^5+9*a1^2*a2*a3*a4^3-9*a1^2*a2*a3*a4^2+6*a1^2*a3^2*a4^6-12*a1^2*a3^2*a4^5+18*a1^2*a3^2*a4^4-12*a1^2*a3^2*a4^3+6*a1^2*a3^2*a4^2+12*a1*a2^3*a4^5-6*a1*a2^3*a4^4+12*a1*a2^3*a4^3+6*a1*a2^3*a4+3*a1*a2^2*a3*a4^5+3*a1*a2^2*a3*a4^4+3*a1*a2^2*a3*a4^2+3*a1*a2^2*a3*a4+6*a1*a2*a3^2*a4^5-12*a1*a2*a3^2*a4^4+6*a1*a2*a3^2*a4^2-12*a1*a2*a3^2*a4+6*a1*a3^3*a4^5-12*a1*a3^3*a4^4+12*a1*a3^3*a4^3-6*a1*a3^3*a4^2-6*a2^4*a4^3+6*a2^4*a4^2-6*a2^4*a4-3*a2^3*a3*a4^4+3*a2^3*a3*a4^3-12*a2^3*a3*a4^2+9*a2^3*a3*a4-9*a2^3*a3+9*a2^2*a3^2*a4^4-9*a2^2*a3^2*a4^3+18*a2^2*a3^2*a4^2-9*a2^2*a3^2*a4+9*a2^2*a3^2+12*a2*a3^3*a4^3-12*a2*a3^3*a4^2+12*a2*a3^3*a4+6*a3^4*a4^4-6*a3^4*a4^3+6*a3^4*a4^2)/(a1*a4^2+a1*a4-a2*a4-a2-a3*a4-a3)*X^2+(6*a1^4*a4^6-6*a1^4*a4^5+6*a1^4*a4^4-6*a1^3*a2*a4^6+12*a1^3*a2*a4^5-12*a1^3*a2*a4^4+6*a1^3*a2*a4^3+3*a1^3*a3*a4^7-9*a1^3*a3*a4^6+12*a1^3*a3*a4^5-9*a1^3*a3*a4^4+3*a1^3*a3*a4^3+6*a1^2*a2^2*a4^6-12*a1^2*a2^2*a4^5+18*a1^2*a2^2*a4^4-12*a1^2*a2^2*a4^3+6*a1^2*a2^2*a4^2+9*a1^2*a2*a3*a4^6-9*a1^2*a2*a3*a4^5+9*a1^2*a2*a3*a4^3-9*a1^2*a2*a3*a4^2+3*a1^2*a3^2*a4^6-15*a1^2*a3^2*a4^5+18*a1^2*a3^2*a4^4-15*a1^2*a3^2*a4^3+3*a1^2*a3^2*a4^2+6*a1*a2^3*a4^5-12*a1*a2^3*a4^4+12*a1*a2^3*a4^3-6*a1*a2^3*a4^2+6*a1*a2^2*a3*a4^5-12*a1*a2^2*a3*a4^4+6*a1*a2^2*a3*a4^2-12*a1*a2^2*a3*a4+3*a1*a2*a3^2*a4^5+3*a1*a2*a3^2*a4^4+3*a1*a2*a3^2*a4^2+3*a1*a2*a3^2*a4+12*a1*a3^3*a4^5-6*a1*a3^3*a4^4+12*a1*a3^3*a4^3+6*a1*a3^3*a4+6*a2^4*a4^4-6*a2^4*a4^3+6*a2^4*a4^2+12*a2^3*a3*a4^3-12*a2^3*a3*a4^2+12*a2^3*a3*a4+9*a2^2*a3^2*a4^4-9*a2^2*a3^2*a4^3+18*a2^2*a3^2*a4^2-9*a2^2*a3^2*a4+9*a2^2*a3^2-3*a2*a3^3*a4^4+3*a2*a3^3*a4^3-12*a2*a3^3*a4^2+9*a2*a3^3*a4-9*a2*a3^3-6*a3^4*a4^3+6*a3^4*a4^2-6*a3^4*a4)/(a1*a4^2+a1*a4-a2*a4-a2-a3*a4-a3)*X+(-3*a1^4*a4^5+3*a1^4*a4^4+6*a1^3*a2*a4^5-3*a1^3*a2*a4^4+3*a1^3*a2*a4^3-6*a1^3*a3*a4^6+6*a1^3*a3*a4^5-3*a1^3*a3*a4^4-3*a1^3*a3*a4^3-6*a1^2*a2^2*a4^5+6*a1^2*a2^2*a4^4-6*a1^2*a2^2*a4^3+3*a1^2*a2*a3*a4^6-3*a1^2*a2*a3*a4^5+6*a1^2*a2*a3*a4^4+6*a1^2*a2*a3*a4^3-6*a1^2*a2*a3*a4^2+6*a1^2*a3^2*a4^6+6*a1^2*a3^2*a4^4+6*a1^2*a3^2*a4^2+3*a1*a2^3*a4^5-3*a1*a2^3*a4^4+6*a1*a2^3*a4^3+9*a1*a2^2*a3*a4^5-3*a1*a2^2*a3*a4^4-6*a1*a2^2*a3*a4^3+6*a1*a2^2*a3*a4^2-3*a1*a2*a3^2*a4^5+3*a1*a2*a3^2*a4^4-6*a1*a2*a3^2*a4^3-6*a1*a2*a3^2*a4^2+6*a1*a2*a3^2*a4-6*a1*a3^3*a4^4+6*a1*a3^3*a4^3-3*a1*a3^3*a4^2-3*a1*a3^3*a4+3*a2^4*a4^4-3*a2^4*a4^3-3*a2^3*a3*a4^4+3*a2^3*a3*a4^3-6*a2^3*a3*a4^2-6*a2^2*a3^2*a4^3+6*a2^2*a3^2*a4^2-6*a2^2*a3^2*a4-6*a2*a3^3*a4^2+3*a2*a3^3*a4-3*a2*a3^3-3*a3^4*a4+3*a3^4)/(a1*a4^2+a1*a4-a2*a4-a2-a3*a4-a3)',
)
