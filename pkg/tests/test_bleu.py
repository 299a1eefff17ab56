import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from bleukit.errors import (
    EmptyHypothesisError,
    EmptyReferenceError,
    LengthMismatchError,
    StatsMismatchError,
)
from bleukit.metrics import (
    BleuParams,
    CorpusStats,
    aggregate,
    brevity_penalty,
    corpus_bleu,
    corpus_stats,
    extract_ngrams,
    segment_stats,
    smooth_precisions,
)
from oracles.brute import brute_bleu

RAW = BleuParams(tokenizer="none")
RAW_NOSMOOTH = BleuParams(tokenizer="none", smoothing="none")


# Frozen from the brute-force oracle: p = (1/4, 1/6, 1/8, 1/8), BP = 1.
CLIPPING_EXP_SCORE = 15.97357760615681
# 100 * exp(1 - 5/4)
SHORT_HYP_SCORE = 77.88007830714049


def test_extract_ngrams():
    assert extract_ngrams(["a", "b", "a"], 2) == {("a",): 2, ("b",): 1, ("a", "b"): 1, ("b", "a"): 1}
    assert extract_ngrams([], 4) == {}
    assert extract_ngrams(["x"], 4) == {("x",): 1}
    with pytest.raises(ValueError):
        extract_ngrams(["x"], 0)


def test_segment_stats_clipping():
    stats = segment_stats(["the"] * 4, [["the", "cat"]], RAW)
    assert stats.correct[:2] == (1, 0)
    assert stats.total == (4, 3, 2, 1)
    assert (stats.hyp_len, stats.ref_len) == (4, 2)


def test_segment_stats_clips_to_max_over_references():
    hyp = ["a", "a", "a"]
    stats = segment_stats(hyp, [["a", "b"], ["a", "a", "c"]], RAW)
    assert stats.correct[0] == 2


def test_segment_stats_identity():
    toks = "a b c a b".split()
    stats = segment_stats(toks, [toks], RAW)
    assert stats.correct == stats.total
    assert stats.ref_len == stats.hyp_len


@pytest.mark.parametrize("policy, expected", [("closest", 3), ("shortest", 2)])
def test_ref_len_policy(policy, expected):
    hyp = ["w"] * 4
    refs = [["w"] * 3, ["w"] * 5]
    assert segment_stats(hyp, refs, BleuParams(ref_len_policy="closest")).ref_len == 3  # tie -> shorter
    refs = [["w"] * 2, ["w"] * 3, ["w"] * 7]
    assert segment_stats(hyp, refs, BleuParams(ref_len_policy=policy)).ref_len == expected


def test_segment_stats_needs_reference():
    with pytest.raises(EmptyReferenceError):
        segment_stats(["a"], [], RAW)


def test_aggregate():
    s = CorpusStats((1, 0), (3, 2), 3, 4)
    t = CorpusStats((2, 1), (2, 1), 2, 2)
    zero = CorpusStats.zero(2)
    assert aggregate([s, zero]) == s
    assert aggregate([s, t]) == aggregate([t, s]) == CorpusStats((3, 1), (5, 3), 5, 6)
    with pytest.raises(StatsMismatchError):
        aggregate([s, CorpusStats.zero(4)])


def test_smooth_precisions_exp():
    stats = CorpusStats((1, 0, 0, 0), (4, 3, 2, 1), 4, 2)
    assert smooth_precisions(stats, "exp") == pytest.approx([0.25, 1 / 6, 1 / 8, 1 / 8], abs=1e-15)


def test_smooth_precisions_none_and_floor():
    stats = CorpusStats((2, 0), (4, 3), 4, 4)
    assert smooth_precisions(stats, "none") == [0.5, 0.0]
    assert smooth_precisions(stats, "floor", 0.1) == pytest.approx([0.5, 0.1 / 3])


@pytest.mark.parametrize("scheme", ["exp", "none", "floor"])
def test_smoothing_is_noop_for_perfect_counts(scheme):
    stats = CorpusStats((4, 3, 2, 1), (4, 3, 2, 1), 4, 4)
    assert smooth_precisions(stats, scheme) == [1.0] * 4


def test_smooth_precisions_excludes_empty_orders():
    stats = CorpusStats((2, 1, 0, 0), (2, 1, 0, 0), 2, 2)
    assert smooth_precisions(stats, "exp") == [1.0, 1.0, None, None]


def test_smooth_precisions_empty_hypothesis():
    with pytest.raises(EmptyHypothesisError):
        smooth_precisions(CorpusStats.zero(4), "exp")


def test_brevity_penalty():
    assert brevity_penalty(5, 5) == 1.0
    assert brevity_penalty(10, 5) == 1.0
    assert brevity_penalty(4, 5) == pytest.approx(0.778801, abs=1e-6)
    with pytest.raises(EmptyHypothesisError):
        brevity_penalty(0, 5)
    with pytest.raises(EmptyReferenceError):
        brevity_penalty(5, 0)


def test_corpus_bleu_worked_examples():
    assert corpus_bleu(["a b c d"], [["a b c d e"]], RAW).score == pytest.approx(SHORT_HYP_SCORE, abs=1e-9)
    result = corpus_bleu(["the the the the"], [["the cat"]], RAW)
    assert result.score == pytest.approx(CLIPPING_EXP_SCORE, abs=1e-9)
    assert result.brevity_penalty == 1.0
    assert result.ratio == 2.0


def test_corpus_bleu_identity_is_exact():
    corpus = ["The cat sat on the mat.", "Dogs, too!"]
    assert corpus_bleu(corpus, [corpus]).score == 100.0


def test_corpus_bleu_default_uses_13a():
    # 13a splits the comma and the full stop; raw whitespace splitting does not.
    hyp, ref = ["Hello, world."], [["Hello , world ."]]
    assert corpus_bleu(hyp, ref).score == 100.0
    assert corpus_bleu(hyp, ref, RAW).score < 100.0


def test_corpus_bleu_lowercase():
    hyp, ref = ["THE CAT SAT"], [["the cat sat"]]
    assert corpus_bleu(hyp, ref, BleuParams(lowercase=True)).score == 100.0
    assert corpus_bleu(hyp, ref, BleuParams(smoothing="none")).score == 0.0
    assert corpus_bleu(hyp, ref, BleuParams(lowercase=True)).signature.case == "lc"


def test_corpus_bleu_length_mismatch_is_fatal():
    with pytest.raises(LengthMismatchError):
        corpus_bleu(["a", "b"], [["a"]])
    with pytest.raises(LengthMismatchError):
        corpus_bleu(["a"], [["a"], ["a", "b"]])


def test_corpus_bleu_empty_corpus():
    with pytest.raises(EmptyHypothesisError):
        corpus_bleu([], [[]])
    with pytest.raises(EmptyReferenceError):
        corpus_bleu(["a"], [])


def test_corpus_bleu_all_empty_hypotheses_score_zero_with_diagnostic():
    result = corpus_bleu(["", " "], [["a b", "c"]])
    assert result.score == 0.0
    assert result.diagnostic


def test_corpus_bleu_one_word_segments_not_zeroed():
    result = corpus_bleu(["a", "b"], [["a", "b"]], RAW_NOSMOOTH)
    assert result.score == 100.0
    assert result.effective_order == 1


def test_corpus_bleu_no_smoothing_zero():
    result = corpus_bleu(["a b c d"], [["a x c y"]], RAW_NOSMOOTH)
    assert result.score == 0.0


def test_bleu_params_validation():
    with pytest.raises(ValueError):
        BleuParams(max_order=0)
    with pytest.raises(ValueError):
        BleuParams(smoothing="floor", floor_value=0)
    with pytest.raises(ValueError):
        BleuParams(smoothing="add-k")


def test_signature_records_multi_reference_policy():
    sig = corpus_bleu(["a b"], [["a b"], ["a c"]]).signature
    assert sig.numrefs == 2
    assert sig.reflen == "closest"
    assert corpus_bleu(["a b"], [["a b"]]).signature.reflen is None


# -- properties ----------------------------------------------------------------

VOCAB = [f"w{i}" for i in range(10)]
segment = st.lists(st.sampled_from(VOCAB), min_size=0, max_size=12).map(" ".join)
nonempty_segment = st.lists(st.sampled_from(VOCAB), min_size=1, max_size=12).map(" ".join)


@st.composite
def parallel_corpus(draw, min_refs=1, max_refs=3, nonempty=False):
    seg = nonempty_segment if nonempty else segment
    n = draw(st.integers(1, 8))
    hyps = draw(st.lists(seg, min_size=n, max_size=n))
    k = draw(st.integers(min_refs, max_refs))
    refs = [draw(st.lists(seg, min_size=n, max_size=n)) for _ in range(k)]
    return hyps, refs


@given(parallel_corpus(), st.sampled_from(["exp", "none", "floor"]))
def test_score_in_range(corpus, smoothing):
    hyps, refs = corpus
    try:
        score = corpus_bleu(hyps, refs, BleuParams(tokenizer="none", smoothing=smoothing)).score
    except EmptyReferenceError:
        return
    assert 0.0 <= score <= 100.0


@given(st.lists(nonempty_segment, min_size=1, max_size=8))
def test_identity(corpus):
    assert corpus_bleu(corpus, [corpus], RAW).score == 100.0


@given(parallel_corpus(nonempty=True), st.randoms())
def test_permutation_invariance(corpus, rnd):
    hyps, refs = corpus
    order = list(range(len(hyps)))
    rnd.shuffle(order)
    a = corpus_bleu(hyps, refs, RAW)
    b = corpus_bleu([hyps[i] for i in order], [[r[i] for i in order] for r in refs], RAW)
    assert a.stats == b.stats
    assert a.score == b.score


@given(parallel_corpus(min_refs=1, max_refs=1, nonempty=True),
       parallel_corpus(min_refs=1, max_refs=1, nonempty=True))
def test_additivity(part_a, part_b):
    (ha, ra), (hb, rb) = part_a, part_b
    whole = corpus_stats(ha + hb, [ra[0] + rb[0]], RAW)
    assert whole == aggregate([corpus_stats(ha, ra, RAW), corpus_stats(hb, rb, RAW)])


@given(parallel_corpus(nonempty=True))
def test_reference_monotonicity(corpus):
    hyps, refs = corpus
    extra = list(reversed(hyps))
    for i, h in enumerate(hyps):
        one = segment_stats(h.split(), [r[i].split() for r in refs], RAW)
        more = segment_stats(h.split(), [r[i].split() for r in refs] + [extra[i].split()], RAW)
        assert all(m >= o for m, o in zip(more.correct, one.correct))
        assert more.total == one.total and more.hyp_len == one.hyp_len


@given(parallel_corpus(nonempty=True))
def test_smoothing_neutral_when_all_orders_match(corpus):
    hyps, refs = corpus
    stats = corpus_stats(hyps, refs, RAW)
    if all(c > 0 for c, t in zip(stats.correct, stats.total) if t > 0) and stats.ref_len:
        exp = corpus_bleu(hyps, refs, RAW).score
        none = corpus_bleu(hyps, refs, RAW_NOSMOOTH).score
        assert exp == none


@given(parallel_corpus(nonempty=True))
@settings(max_examples=200)
def test_score_matches_component_formula(corpus):
    hyps, refs = corpus
    result = corpus_bleu(hyps, refs, RAW)
    used = [p for p, t in zip(result.precisions, result.stats.total) if t > 0]
    if all(p > 0 for p in used):
        expected = 100 * result.brevity_penalty * math.exp(sum(map(math.log, used)) / len(used))
        assert result.score == pytest.approx(expected, abs=1e-9)


def test_matches_brute_force_oracle_quick():
    rnd = random.Random(7)
    for _ in range(50):
        n = rnd.randint(1, 8)
        hyps = [" ".join(rnd.choices(VOCAB, k=rnd.randint(1, 12))) for _ in range(n)]
        refs = [[" ".join(rnd.choices(VOCAB, k=rnd.randint(1, 12))) for _ in range(n)]
                for _ in range(rnd.randint(1, 3))]
        assert corpus_bleu(hyps, refs, RAW_NOSMOOTH).score == pytest.approx(brute_bleu(hyps, refs), abs=1e-9)
