"""Expression language: parser, evaluators, corpus."""

import random
from fractions import Fraction

import pytest

from qcatalan.cyclotomic import CycloElem
from qcatalan.qdsl import (
    Bin,
    Call,
    EvalError,
    Num,
    ParseError,
    Pow,
    Sum,
    Var,
    eval_cyclo,
    eval_poly,
    parse,
    parse_corpus_line,
    render,
    run_corpus_entry,
    shipped_corpus,
)
from qcatalan.ring import Poly


def test_parse_structure():
    e = parse("qbin(4,2)")
    assert e == Call("qbin", (Num(Fraction(4)), Num(Fraction(2))))
    e = parse("sum(k=0..n-1, q^k * qcat(k))")
    assert isinstance(e, Sum)
    assert e.var == "k"
    assert e.lower == Num(Fraction(0))
    assert e.upper == Bin("-", Var("n"), Num(Fraction(1)))
    assert isinstance(e.body, Bin) and e.body.op == "*"
    assert isinstance(e.body.left, Pow)


def test_parse_precedence():
    assert parse("1+2*3") == Bin("+", Num(Fraction(1)), Bin("*", Num(Fraction(2)), Num(Fraction(3))))
    assert parse("-q^2") == parse("-(q^2)")
    assert parse("a-b+c") == Bin("+", Bin("-", Var("a"), Var("b")), Var("c"))
    assert parse("2^3^2") == Pow(Num(Fraction(2)), Pow(Num(Fraction(3)), Num(Fraction(2))))


def test_parse_errors():
    with pytest.raises(ParseError) as exc:
        parse("q^^2")
    assert exc.value.pos == 2
    assert exc.value.expected
    with pytest.raises(ParseError):
        parse("sum(k=")
    with pytest.raises(ParseError):
        parse("qbin(4,2")
    with pytest.raises(ParseError):
        parse("1 + ")
    with pytest.raises(ParseError):
        parse("foo(3)")  # unknown call name


def test_eval_poly_examples():
    assert eval_poly(parse("qcat(3)")) == Poly([1, 0, 1, 1, 1, 0, 1])
    assert eval_poly(parse("sum(k=0..n-1, q^k*qcat(k))"), {"n": 3}) == Poly(
        [1, 1, 1, 0, 1]
    )
    assert eval_poly(parse("qbin(4,2)")) == Poly([1, 1, 2, 1, 1])
    assert eval_poly(parse("legendre3(5)")) == Poly([-1])
    assert eval_poly(parse("floor((n+1)/2)"), {"n": 4}) == Poly([2])


def test_eval_poly_errors():
    with pytest.raises(EvalError):
        eval_poly(parse("q^(1/3)"))  # fractional exponent
    with pytest.raises(EvalError):
        eval_poly(parse("q^(-1)"))  # negative exponent in poly mode
    with pytest.raises(EvalError):
        eval_poly(parse("1/(1-q)"))  # inexact division
    with pytest.raises(EvalError):
        eval_poly(parse("x + 1"))  # unbound variable
    with pytest.raises(EvalError):
        eval_poly(parse("qcat(q)"))  # q in an integer position


def test_poly_division_exact_cases():
    assert eval_poly(parse("(1-q^2)/(1-q)")) == Poly([1, 1])
    assert eval_poly(parse("(2+2*q)/2")) == Poly([1, 1])
    assert eval_poly(parse("q^2/q")) == Poly([0, 1])


def test_zero_short_circuit():
    # 0 * (undefined exponent) = 0 by evaluation order
    assert eval_poly(parse("legendre3(3) * q^((3^2-1)/3)")).is_zero()
    assert eval_cyclo(parse("0 * (1/(1-q^0))"), 5, 1).is_zero()
    # but the right factor alone still errors
    with pytest.raises(EvalError):
        eval_poly(parse("q^((3^2-1)/3)"))


def test_eval_cyclo_examples():
    v = eval_cyclo(parse("1/(1-q)"), 3, 1)
    assert v == CycloElem(3, [2, 1], 3)
    # multiply back
    assert v * (CycloElem.one(3) - CycloElem.root_power(3, 1)) == 1
    assert eval_cyclo(parse("q^3"), 3, 1) == 1
    lhs = eval_cyclo(
        parse("sum(k=1..n, (-1)^k * q^(k*(3*k-1)/2) / (1-q^(3*k-1)))"),
        3,
        1,
        {"n": 1},
    )
    assert lhs == CycloElem(3, [-1, -2], 3)


def test_eval_cyclo_errors():
    with pytest.raises(EvalError) as exc:
        eval_cyclo(parse("1/(1-q^3)"), 3, 1)
    assert "1 - q^3" in str(exc.value)
    with pytest.raises(ValueError):
        eval_cyclo(parse("q"), 6, 2)  # j not coprime


def test_negative_exponents_in_cyclo():
    assert eval_cyclo(parse("q^(-1)"), 5, 2) == CycloElem.root_power(5, -2)
    assert eval_cyclo(parse("q^(-7)"), 5, 1) == CycloElem.root_power(5, 3)


def test_lexical_shadowing():
    # inner sum variable shadows the outer binding of the same name
    e = parse("sum(k=1..3, k) + k")
    assert eval_poly(e, {"k": 10}) == Poly([16])
    # nested sums
    e2 = parse("sum(i=1..2, sum(i=1..i, 1))")
    assert eval_poly(e2) == Poly([3])


def test_empty_sum_is_zero():
    assert eval_poly(parse("sum(k=1..0, q^k)")).is_zero()
    assert eval_poly(parse("sum(k=5..2, 1/(1-q^0))")).is_zero()  # body never runs
    assert eval_cyclo(parse("sum(k=1..n-1, q^k)"), 7, 1, {"n": 1}).is_zero()


def test_render_round_trip_corpus():
    entries = shipped_corpus()
    assert len(entries) >= 20
    for entry in entries:
        assert parse(render(entry.lhs)) == entry.lhs, entry.raw
        assert parse(render(entry.rhs)) == entry.rhs, entry.raw


def test_render_round_trip_random():
    rng = random.Random(606)
    names = ["n", "k", "N"]

    def gen(depth):
        pick = rng.randrange(8 if depth else 5)
        if pick == 0:
            return Num(Fraction(rng.randrange(0, 9)))
        if pick == 1:
            return Var(rng.choice(names))
        if pick == 2:
            return Var("q")
        if pick == 3:
            return Call("qbin", (gen(depth - 1), gen(depth - 1))) if depth else Num(Fraction(1))
        if pick == 4:
            return Sum("t", gen(depth - 1), gen(depth - 1), gen(depth - 1)) if depth else Var("q")
        if pick == 5:
            from qcatalan.qdsl import Neg

            return Neg(gen(depth - 1))
        if pick == 6:
            return Bin(rng.choice("+-*/"), gen(depth - 1), gen(depth - 1))
        return Pow(gen(depth - 1), gen(depth - 1))

    for _ in range(300):
        e = gen(3)
        assert parse(render(e)) == e, render(e)


def test_mode_consistency():
    # division-free expressions with nonnegative exponents: eval_cyclo equals
    # eval_poly followed by reduction into Q(zeta_m)
    rng = random.Random(11)
    texts = [
        "sum(k=0..n-1, q^k*qcat(k))",
        "qbin(2*n, n) + q^n",
        "(1+q)^3 - q^(n+1)",
        "sum(k=1..n, q^(k*k))",
    ]
    for text in texts:
        e = parse(text)
        for _ in range(6):
            n = rng.randint(1, 6)
            m = rng.randint(1, 12)
            js = [j for j in range(1, m + 1) if __import__("math").gcd(j, m) == 1]
            j = rng.choice(js)
            direct = eval_cyclo(e, m, j, {"n": n})
            via_poly = eval_poly(e, {"n": n})
            # substitute q -> zeta_m^j by mapping q^i to x^(i*j)
            lifted = CycloElem.zero(m)
            for i, c in enumerate(via_poly.coeffs):
                lifted = lifted + CycloElem.root_power(m, i * j) * c
            assert direct == lifted, (text, n, m, j)


def test_corpus_line_parsing():
    entry = parse_corpus_line(1, "qcat(2) == 1 + q^2 @ poly()")
    assert entry.mode == "poly" and entry.mod_index is None
    entry = parse_corpus_line(
        2, "sum(k=0..n-1, q^k*qcat(k)) == q^floor(n/3) @ poly(n=3..15..3) mod Phi(n)"
    )
    assert entry.mod_index == Var("n") and entry.mod_power == 1
    entry = parse_corpus_line(3, "q == q @ cyclo(m=6, j=all)")
    assert entry.bindings[1][1] == "all"
    with pytest.raises(ValueError):
        parse_corpus_line(4, "q == q @ cyclo(j=1)")  # missing m
    with pytest.raises(ValueError):
        parse_corpus_line(5, "q == q")  # no mode
    with pytest.raises(ValueError):
        parse_corpus_line(6, "q == q @ cyclo(m=6, j=1) mod Phi(n)")  # mod in cyclo


def test_corpus_failure_witness():
    entry = parse_corpus_line(1, "qcat(2) == 1 + q @ poly()")
    rep = run_corpus_entry(entry)
    assert rep.status == "fail" and rep.witness


def test_shipped_corpus_all_pass():
    for entry in shipped_corpus():
        rep = run_corpus_entry(entry)
        assert rep.passed, f"line {entry.line_no}: {rep.witness}\n  {entry.raw}"
        assert rep.params["cases"] >= 1


def test_corpus_agrees_with_dedicated_suites():
    """The corpus is a second, independent implementation path: spot-check
    its sweeps against the dedicated suite functions on shared parameters."""
    from qcatalan.congruence import (
        verify_liu_mod_phi2,
        verify_main_theorem,
        verify_tauraso_mod_phi,
    )
    from qcatalan.rootid import verify_explicit, verify_main3n

    entries = {e.raw: e for e in shipped_corpus()}

    def entry_for(fragment):
        matches = [e for raw, e in entries.items() if fragment in raw]
        assert len(matches) == 1, fragment
        return matches[0]

    # the main theorem line covers n = 3..15 step 3; the suites agree there
    assert run_corpus_entry(entry_for("q^(n*(2*n+1)/3)")).passed
    for n in (3, 6, 9, 12, 15):
        assert verify_main_theorem(n).passed
    assert run_corpus_entry(entry_for("== -1 - q^((2*n-1)/3)")).passed
    for n in (2, 5, 8, 11, 14):
        assert verify_tauraso_mod_phi(n).passed
    assert run_corpus_entry(entry_for("- ((n-1)/3)*(q^n - 1)")).passed
    for n in (4, 7, 10, 13):
        assert verify_liu_mod_phi2(n).passed
    # main3n corpus line n <= 8 all j matches the rootid suite
    assert run_corpus_entry(entry_for("1/3 + ((3*n+1)/6)*q^(2*n)")).passed
    from qcatalan.rootid import galois_orbit

    for n in range(1, 9):
        for j in galois_orbit(3 * n):
            assert verify_main3n(n, j).passed
    assert run_corpus_entry(entry_for("(n/3)*(1 - q^n)")).passed
    for n in range(1, 11):
        for j in galois_orbit(3 * n):
            assert verify_explicit(n, j).passed
