"""Share encoding, stacking, PBM round-trips and statistical behaviour."""

from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pvss import (
    BinaryImage,
    SchemeParams,
    codebook_for,
    empirical_contrast,
    encode,
    encode_with_params,
    stack,
)
from pvss.imaging import (
    dumps_pbm,
    loads_pbm,
    read_pbm,
    save_share_set,
    share_path,
    sidecar_path,
    write_pbm,
)


def img(rows) -> BinaryImage:
    return BinaryImage(np.array(rows, dtype=np.uint8))


# --- BinaryImage / stacking -------------------------------------------------


def test_binary_image_validation():
    with pytest.raises(ValueError):
        BinaryImage(np.array([0, 1], dtype=np.uint8))  # 1-d
    with pytest.raises(ValueError):
        img([[0, 2]])


def test_stack_is_pixelwise_or():
    a = img([[0, 0, 1, 1]])
    b = img([[0, 1, 0, 1]])
    assert stack([a, b]) == img([[0, 1, 1, 1]])


def test_stack_identity_and_absorption():
    a = img([[0, 1], [1, 0]])
    assert stack([a]) == a
    black = img([[1, 1], [1, 1]])
    assert stack([a, black]) == black


def test_stack_rejects_mismatched_dimensions():
    with pytest.raises(ValueError):
        stack([img([[0]]), img([[0, 1]])])
    with pytest.raises(ValueError):
        stack([])


# --- encoding ---------------------------------------------------------------


def test_22_single_pixel_semantics():
    spec = codebook_for(SchemeParams(k=2, n=2))
    white = img([[0]])
    black = img([[1]])
    for seed in range(40):
        shares = encode(white, spec, seed=seed).shares
        assert shares[0].pixels[0, 0] == shares[1].pixels[0, 0]
        shares = encode(black, spec, seed=seed).shares
        assert shares[0].pixels[0, 0] != shares[1].pixels[0, 0]


def test_22_stacked_reconstruction():
    spec = codebook_for(SchemeParams(k=2, n=2))
    secret = img([[0, 1], [1, 0]])
    share_set = encode(secret, spec, seed=11)
    stacked = stack(share_set.shares)
    # black pixels always come back black; white come back as the shares agree
    assert (stacked.pixels[secret.pixels == 1] == 1).all()


def test_encode_rejects_empty_image():
    secret = BinaryImage(np.zeros((0, 4), dtype=np.uint8))
    spec = codebook_for(SchemeParams(k=2, n=2))
    with pytest.raises(ValueError):
        encode(secret, spec, seed=1)


def test_encode_is_deterministic_and_regenerable():
    params = SchemeParams(k=3, n=5)
    rng = np.random.default_rng(5)
    secret = BinaryImage(rng.integers(0, 2, size=(40, 60), dtype=np.uint8))
    first = encode_with_params(secret, params, seed=123)
    second = encode_with_params(secret, params, seed=123)
    assert all((a.pixels == b.pixels).all()
               for a, b in zip(first.shares, second.shares))
    different = encode_with_params(secret, params, seed=124)
    assert any((a.pixels != b.pixels).any()
               for a, b in zip(first.shares, different.shares))


def test_share_set_shapes_and_params():
    params = SchemeParams(k=2, n=4)
    secret = img([[0, 1, 0], [1, 0, 1]])
    ss = encode_with_params(secret, params, seed=5)
    assert ss.n == 4
    assert ss.params == params
    assert all(s.width == 3 and s.height == 2 for s in ss.shares)


def test_single_share_marginal_is_secret_independent():
    """One share alone carries no information: same black rate either way."""
    params = SchemeParams(k=3, n=5)
    spec = codebook_for(params)
    size = (1000, 1000)
    white = BinaryImage(np.zeros(size, dtype=np.uint8))
    black = BinaryImage(np.ones(size, dtype=np.uint8))
    npix = size[0] * size[1]

    # closed-form per-share black rate: sum over classes of
    # copies * C(n,j) * (j/n) / m; both sides give 1/2 for (3,5)
    def expected_rate(counts):
        return sum(c * comb(5, j) * Fraction(j, 5) for j, c in counts.items()) / spec.m

    assert expected_rate(spec.c0_counts) == expected_rate(spec.c1_counts) == Fraction(1, 2)

    sigma = (0.25 / npix) ** 0.5
    for secret in (white, black):
        ss = encode(secret, spec, seed=2024)
        for share in ss.shares:
            rate = share.pixels.mean()
            assert abs(rate - 0.5) < 3 * sigma


def test_measured_contrast_tracks_theory(half_card):
    from pvss import theoretical_contrast

    params = SchemeParams(k=2, n=3)
    ss = encode_with_params(half_card, params, seed=99)
    npix_region = half_card.pixels.size // 2
    sigma = 2 * (0.25 / npix_region) ** 0.5  # generous bound for a difference
    for q in (1, 2, 3):
        _, _, diff = empirical_contrast(stack(ss.shares[:q]), half_card)
        expected = 0.0 if q < 2 else float(theoretical_contrast(params, q))
        assert abs(float(diff) - expected) < 4 * sigma, (q, float(diff), expected)


def test_empirical_contrast_exact_counting():
    secret = img([[0, 1], [0, 1]])
    stacked = img([[0, 1], [1, 1]])
    white_rate, black_rate, diff = empirical_contrast(stacked, secret)
    assert white_rate == Fraction(1, 2)
    assert black_rate == 0
    assert diff == Fraction(1, 2)


def test_empirical_contrast_requires_both_regions():
    with pytest.raises(ValueError, match="black"):
        empirical_contrast(img([[0]]), img([[0]]))
    with pytest.raises(ValueError, match="white"):
        empirical_contrast(img([[0]]), img([[1]]))
    with pytest.raises(ValueError):
        empirical_contrast(img([[0]]), img([[0, 1]]))


# --- PBM i/o ---------------------------------------------------------------


def test_pbm_p1_parse():
    data = b"P1\n# demo\n4 2\n0 1 0 1\n1111\n"
    image = loads_pbm(data)
    assert image == img([[0, 1, 0, 1], [1, 1, 1, 1]])


def test_pbm_p4_parse_row_padding():
    # width 10 -> 2 bytes per row, last 6 bits of each row ignored
    data = b"P4\n10 2\n" + bytes([0b10101010, 0b11000000, 0x00, 0x40])
    image = loads_pbm(data)
    assert image.width == 10 and image.height == 2
    assert image.pixels[0].tolist() == [1, 0, 1, 0, 1, 0, 1, 0, 1, 1]
    assert image.pixels[1].tolist() == [0] * 9 + [1]


def test_pbm_rejects_garbage():
    with pytest.raises(ValueError):
        loads_pbm(b"P5\n2 2\n255\n....")
    with pytest.raises(ValueError):
        loads_pbm(b"P1\n2 2\n0 1 1")  # truncated
    with pytest.raises(ValueError):
        loads_pbm(b"P4\n4 4\n\x00")  # truncated raster
    with pytest.raises(ValueError):
        loads_pbm(b"P1\n0 3\n")


@given(st.integers(1, 40), st.integers(1, 23), st.booleans(), st.integers(0, 2**31))
@settings(max_examples=60, deadline=None)
def test_pbm_round_trip(width, height, ascii_mode, seed):
    rng = np.random.default_rng(seed)
    image = BinaryImage(rng.integers(0, 2, size=(height, width), dtype=np.uint8))
    assert loads_pbm(dumps_pbm(image, ascii=ascii_mode)) == image


def test_pbm_file_round_trip(tmp_path):
    image = img([[0, 1, 1], [1, 0, 0]])
    path = tmp_path / "t.pbm"
    write_pbm(image, path)
    assert read_pbm(path) == image
    assert path.read_bytes().startswith(b"P4\n3 2\n")


def test_share_files_and_sidecar(tmp_path):
    params = SchemeParams(k=2, n=3)
    secret = img([[0, 1], [1, 0]])
    ss = encode_with_params(secret, params, seed=77)
    stem = tmp_path / "demo"
    paths = save_share_set(ss, stem)
    for i in (1, 2, 3):
        p = share_path(stem, i)
        assert p in paths and p.name == f"demo.share{i}.pbm"
        assert read_pbm(p) == ss.shares[i - 1]
    import json

    meta = json.loads(sidecar_path(stem).read_text())
    assert meta == {"k": 2, "n": 3, "start_row": 2, "m": 3, "seed": 77}


def test_save_share_set_requires_params():
    spec = codebook_for(SchemeParams(k=2, n=2))
    ss = encode(img([[0]]), spec, seed=1)
    with pytest.raises(ValueError):
        save_share_set(ss, "nowhere")
