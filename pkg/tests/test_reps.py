import warnings

import numpy as np
import pytest

from braident.braids import (
    BraidWord,
    GeneratorLetter,
    concat,
    free_reduce,
    inverse,
    parse_braid_word,
)
from braident.linalg import dagger, equal_up_to_phase, frobenius_norm, is_unitary, kron
from braident.reps import (
    JONES_A,
    b2_rep,
    closure_check,
    evaluate,
    ge_rep,
    generic_rep,
    jones_rep,
    temperley_lieb_generators,
    verify_relations,
    yang_baxter_unitary,
)

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
I8 = np.eye(8, dtype=complex)

BORROMEAN = "(s1 s2^-1)^3"
NUS = "(s1 s2)^3"


def quiet_rep(builder, *args):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return builder(*args)


def wrapped_angle_distance(a, b):
    return abs((a - b + np.pi) % (2 * np.pi) - np.pi)


def random_word(rng, strands, max_len=12):
    length = int(rng.integers(0, max_len + 1))
    letters = tuple(
        GeneratorLetter(int(rng.integers(1, strands)), int(rng.choice([1, -1])))
        for _ in range(length)
    )
    return BraidWord(strands, letters)


class TestB2Rep:
    def test_generator_square_is_phase(self):
        for theta in (0.0, np.pi / 4):
            rep = quiet_rep(b2_rep, theta)
            m = rep.generator_images[0]
            assert np.allclose(m @ m, np.exp(2j * theta) * I4, atol=1e-12)

    def test_default_angle(self):
        rep = b2_rep()
        assert rep.parameters["theta"] == 1.0
        assert is_unitary(rep.generator_images[0], 1e-12)

    def test_rational_angle_warns(self):
        for theta in (0.0, np.pi / 4, np.pi):
            with pytest.warns(UserWarning, match="rational multiple of pi"):
                b2_rep(theta)

    def test_irrational_angle_does_not_warn(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            b2_rep(1.0)
            ge_rep(0.37)

    def test_vacuous_relations(self):
        report = verify_relations(b2_rep(1.0))
        assert report.passed
        assert report.max_residual == 0.0
        assert report.far_commutation_residuals == ()
        assert report.braiding_residuals == ()


class TestGeRep:
    def test_braiding_relation_holds(self):
        report = verify_relations(ge_rep(1.0), 1e-12)
        assert report.passed
        assert report.braiding_residuals[0][1] <= 1e-12

    def test_images_are_tensor_shifts(self):
        theta = 1.0
        rep = ge_rep(theta)
        u = yang_baxter_unitary(theta)
        assert np.allclose(rep.generator_images[0], kron(u, I2))
        assert np.allclose(rep.generator_images[1], kron(I2, u))
        assert is_unitary(rep.generator_images[0], 1e-12)
        assert is_unitary(rep.generator_images[1], 1e-12)

    def test_nus_word_closes_with_phase(self):
        # (sigma_1 sigma_2)^3 = -e^{6 i theta} I
        for theta in (1.0, 0.37):
            rep = quiet_rep(ge_rep, theta)
            result = closure_check(rep, parse_braid_word(NUS, 3), 1e-10)
            assert result.closes
            assert wrapped_angle_distance(result.phase, 6 * theta + np.pi) < 1e-10


class TestJonesRep:
    def test_braiding_relation_holds(self):
        report = verify_relations(jones_rep(), 1e-12)
        assert report.passed

    def test_generator_images_are_unitary(self):
        for sigma in jones_rep().generator_images:
            assert is_unitary(sigma, 1e-12)

    def test_phase_parameter_identity(self):
        assert JONES_A**2 + JONES_A**-2 == pytest.approx(-np.sqrt(2), abs=1e-12)

    def test_explicit_inverse_formula(self):
        rep = jones_rep()
        t1, t2 = temperley_lieb_generators()
        for sigma, t in zip(rep.generator_images, (t1, t2)):
            explicit_inverse = JONES_A**-1 * t + JONES_A * I8
            assert frobenius_norm(sigma @ explicit_inverse - I8) < 1e-12
            assert frobenius_norm(explicit_inverse - dagger(sigma)) < 1e-12

    def test_temperley_lieb_spectra(self):
        for t in temperley_lieb_generators():
            values = np.linalg.eigvalsh(t)
            distance_to_allowed = np.minimum(np.abs(values), np.abs(values - np.sqrt(2)))
            assert np.max(distance_to_allowed) < 1e-12

    def test_temperley_lieb_sandwich_relations(self):
        t1, t2 = temperley_lieb_generators()
        assert frobenius_norm(t1 @ t2 @ t1 - t1) < 1e-12
        assert frobenius_norm(t2 @ t1 @ t2 - t2) < 1e-12


class TestGenericRep:
    def test_matches_product_representation(self):
        rep = generic_rep(yang_baxter_unitary(1.0), 3)
        reference = ge_rep(1.0)
        for built, expected in zip(rep.generator_images, reference.generator_images):
            assert np.allclose(built, expected, atol=1e-14)
        assert rep.relation_report.passed

    def test_identity_block_on_four_strands(self):
        rep = generic_rep(I4, 4)
        assert rep.strands == 4
        assert rep.dimension == 16
        assert rep.relation_report.passed
        assert rep.relation_report.max_residual == 0.0

    def test_swap_satisfies_braiding(self):
        swap = np.array(
            [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
        )
        rep = generic_rep(swap, 3)
        assert rep.relation_report.passed

    def test_diagonal_phase_gate_fails_braiding(self):
        # sigma_1 = D(x)I and sigma_2 = I(x)D are diagonal, so the braid
        # relation reduces to sigma_1 = sigma_2, which fails for this D;
        # the residual is sqrt(2)*|1 - e^{i pi/3}| = sqrt(2).
        diag = np.diag([1.0, 1.0, 1.0, np.exp(1j * np.pi / 3)]).astype(complex)
        rep = generic_rep(diag, 3)
        assert not rep.relation_report.passed
        residual = rep.relation_report.braiding_residuals[0][1]
        assert residual == pytest.approx(np.sqrt(2), abs=1e-12)
        # far commutation still holds by construction
        assert all(r < 1e-14 for _, _, r in rep.relation_report.far_commutation_residuals)

    def test_far_commutation_by_construction(self):
        rep = generic_rep(yang_baxter_unitary(0.9), 5)
        assert all(r < 1e-12 for _, _, r in rep.relation_report.far_commutation_residuals)

    def test_input_validation(self):
        with pytest.raises(ValueError, match="not unitary"):
            generic_rep(2 * I4, 3)
        with pytest.raises(ValueError, match="4x4"):
            generic_rep(I2, 3)
        with pytest.raises(ValueError, match="at least 2"):
            generic_rep(I4, 1)
        with pytest.raises(ValueError, match="at most 8"):
            generic_rep(I4, 9)


class TestEvaluate:
    def test_written_order_product(self):
        rep = ge_rep(1.0)
        word = parse_braid_word("s1 s2", 3)
        expected = rep.generator_images[0] @ rep.generator_images[1]
        assert np.allclose(evaluate(rep, word), expected, atol=1e-14)

    def test_empty_word_is_identity(self):
        assert np.allclose(evaluate(jones_rep(), BraidWord(3)), I8)

    def test_b2_square_at_zero_angle(self):
        rep = quiet_rep(b2_rep, 0.0)
        assert np.allclose(evaluate(rep, parse_braid_word("s1 s1", 2)), I4, atol=1e-13)

    def test_inverse_pair_cancels_exactly(self):
        rep = jones_rep()
        out = evaluate(rep, parse_braid_word("s1 s1^-1", 3))
        assert frobenius_norm(out - I8) < 1e-14

    def test_strand_mismatch(self):
        with pytest.raises(ValueError, match="strands"):
            evaluate(b2_rep(1.0), parse_braid_word("s1", 3))


class TestClosureCheck:
    def test_borromean_word_closes_to_minus_identity(self):
        result = closure_check(jones_rep(), parse_braid_word(BORROMEAN, 3))
        assert result.closes
        assert wrapped_angle_distance(abs(result.phase), np.pi) < 1e-10
        matrix = evaluate(jones_rep(), parse_braid_word(BORROMEAN, 3))
        assert frobenius_norm(matrix + I8) < 1e-12

    def test_nus_word_closes(self):
        assert closure_check(ge_rep(1.0), parse_braid_word(NUS, 3)).closes

    def test_open_word_does_not_close(self):
        result = closure_check(ge_rep(1.0), parse_braid_word("s1 s2", 3))
        assert not result.closes
        assert result.phase is None


class TestRepresentationProperties:
    REPS = None

    @classmethod
    def setup_class(cls):
        cls.REPS = [b2_rep(1.0), ge_rep(1.0), jones_rep()]

    def test_evaluate_is_a_homomorphism(self):
        rng = np.random.default_rng(101)
        for rep in self.REPS:
            for _ in range(30):
                w1 = random_word(rng, rep.strands)
                w2 = random_word(rng, rep.strands)
                lhs = evaluate(rep, concat(w1, w2))
                rhs = evaluate(rep, w1) @ evaluate(rep, w2)
                assert frobenius_norm(lhs - rhs) < 1e-12

    def test_inverse_word_is_dagger(self):
        rng = np.random.default_rng(102)
        for rep in self.REPS:
            for _ in range(20):
                word = random_word(rng, rep.strands)
                assert (
                    frobenius_norm(evaluate(rep, inverse(word)) - dagger(evaluate(rep, word)))
                    < 1e-12
                )

    def test_evaluate_invariant_under_free_reduction(self):
        rng = np.random.default_rng(103)
        for rep in self.REPS:
            for _ in range(20):
                word = random_word(rng, rep.strands)
                assert (
                    frobenius_norm(evaluate(rep, word) - evaluate(rep, free_reduce(word)))
                    < 1e-12
                )

    def test_braiding_rewrite_invariance(self):
        rng = np.random.default_rng(104)
        for rep in (ge_rep(1.0), jones_rep()):
            for _ in range(25):
                prefix = random_word(rng, 3, max_len=5)
                suffix = random_word(rng, 3, max_len=5)
                site_a = BraidWord(
                    3, (GeneratorLetter(1, 1), GeneratorLetter(2, 1), GeneratorLetter(1, 1))
                )
                site_b = BraidWord(
                    3, (GeneratorLetter(2, 1), GeneratorLetter(1, 1), GeneratorLetter(2, 1))
                )
                w_a = concat(concat(prefix, site_a), suffix)
                w_b = concat(concat(prefix, site_b), suffix)
                assert frobenius_norm(evaluate(rep, w_a) - evaluate(rep, w_b)) < 1e-11

    def test_b2_infinite_order_phase_witness(self):
        # evaluate(s1^{2k}) = e^{2k i theta} I with theta = 1.0; the phase
        # 2k mod 2pi never returns to zero for k = 1..20
        rep = b2_rep(1.0)
        for k in range(1, 21):
            word = parse_braid_word(f"s1^{2 * k}", 2)
            phase = equal_up_to_phase(evaluate(rep, word), I4, 1e-9)
            assert phase is not None
            assert wrapped_angle_distance(phase, 2 * k) < 1e-9
            assert wrapped_angle_distance(phase, 0.0) > 1e-3
