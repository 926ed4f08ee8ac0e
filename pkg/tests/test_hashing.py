import random
import subprocess
import sys
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from cihash import fixtures
from cihash.core import IDENTITY, BitState, Strategy
from cihash.hashing import (
    BitString,
    NonAsciiError,
    append_length,
    ascii_bits,
    derive_strategy,
    derive_u_sequence,
    digest,
    encode_message,
    fold_xor_256,
    initial_point,
    mirror_extend,
    pad_to_512,
    preprocess,
    to_hex,
    trace_document,
)

B = BitString
WORKED = fixtures.WORKED_MESSAGE
ascii_text = st.text(alphabet=st.characters(min_codepoint=0, max_codepoint=127), max_size=80)


class TestEncode:
    def test_worked_example_stages(self):
        assert str(ascii_bits(WORKED)) == fixtures.bits(fixtures.ENCODED)
        enc = encode_message(WORKED)
        assert str(enc) == fixtures.bits(fixtures.LENGTH_APPENDED)
        assert len(enc) == 128
        assert enc.groups()[:2] == ["10101001", "10100011"]
        assert enc.groups()[-2:] == ["11101001", "11110001"]

    def test_length_field_for_worked_example(self):
        assert str(append_length(ascii_bits(WORKED)))[-8:] == "1111000" + "1"

    def test_empty(self):
        assert str(encode_message("")) == "111"

    def test_single_char(self):
        assert str(encode_message("T")) == "1010100" + "1" + "1000" + "1"

    def test_bytes_and_str_agree(self):
        assert encode_message(b"abc") == encode_message("abc")

    @pytest.mark.parametrize("msg, pos", [(b"ab\xc3d", 2), ("hé", 1)])
    def test_non_ascii_position(self, msg, pos):
        with pytest.raises(NonAsciiError) as exc:
            encode_message(msg)
        assert exc.value.position == pos
        assert f"position {pos}" in str(exc.value)


class TestMirror:
    def test_worked_example(self):
        m = mirror_extend(encode_message(WORKED))
        assert str(m) == fixtures.bits(fixtures.MIRRORED)
        assert m.groups()[16:18] == ["00011111", "00101110"]

    @pytest.mark.parametrize("s, out", [("1", "1"), ("10", "101"), ("110", "11011")])
    def test_small(self, s, out):
        assert str(mirror_extend(B(s))) == out

    def test_empty(self):
        with pytest.raises(ValueError):
            mirror_extend(B(""))


class TestPad:
    def test_255_bits(self):
        s = B("1" + "0" * 254)
        p = pad_to_512(s)
        assert str(p) == str(s) * 2 + str(s)[:2]

    def test_already_aligned(self):
        s = B("10" * 256)
        assert pad_to_512(s) == s

    def test_513_bits(self):
        assert len(pad_to_512(B("1" * 513))) == 1024

    def test_short_input_repeats(self):
        assert str(pad_to_512(B("110"))) == ("110" * 171)[:512]


class TestFold:
    def test_worked_example(self):
        e = fold_xor_256(pad_to_512(mirror_extend(encode_message(WORKED))))
        assert str(e) == fixtures.bits(fixtures.INITIAL_STATE)

    def test_single_block(self):
        d = "".join(random.Random(1).choice("01") for _ in range(256))
        assert str(fold_xor_256(B(d))) == d

    def test_identical_blocks_cancel(self):
        d = "".join(random.Random(2).choice("01") for _ in range(256))
        assert fold_xor_256(B(d * 2)) == BitState.zeros(256)

    def test_bad_length(self):
        with pytest.raises(ValueError):
            fold_xor_256(B("1" * 300))


class TestUSequence:
    def test_first_value_worked(self):
        u = derive_u_sequence(preprocess(WORKED).normalized)
        assert u[0] == 169
        assert len(u) == 512

    def test_zero_byte(self):
        assert derive_u_sequence(B("00000000")) == [0] * 8

    def test_single_bit_rotates(self):
        assert derive_u_sequence(B("10000000")) == [128, 1, 2, 4, 8, 16, 32, 64]

    def test_matches_integer_rotation(self):
        rng = random.Random(5)
        bits = "".join(rng.choice("01") for _ in range(64))
        value = int(bits, 2)
        expected = []
        for r in range(8):
            rot = ((value << r) | (value >> (64 - r))) & (2**64 - 1)
            expected += list(rot.to_bytes(8, "big"))
        assert derive_u_sequence(B(bits)) == expected

    def test_bad_length(self):
        with pytest.raises(ValueError):
            derive_u_sequence(B("1010"))


class TestStrategy:
    def test_recurrence_head(self):
        s = derive_strategy([169, 163])
        assert s.terms == (170, 247)

    def test_single_zero(self):
        assert derive_strategy([0]).terms == (1,)

    def test_zeros(self):
        # raw 0, (0 + 0 + 1) = 1, (0 + 2 + 2) = 4
        assert derive_strategy([0, 0, 0]).terms == (1, 2, 5)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            derive_strategy([0, 256])

    def test_empty(self):
        with pytest.raises(ValueError):
            derive_strategy([])

    @given(st.lists(st.integers(0, 255), min_size=1, max_size=50))
    def test_against_reference_loop(self, u):
        raw = [u[0]]
        for n in range(1, len(u)):
            raw.append((u[n] + 2 * raw[-1] + n) % 256)
        assert derive_strategy(u) == Strategy(tuple(r + 1 for r in raw), 256)


class TestHex:
    @pytest.mark.parametrize("bits, out", [("0110", "6"), ("11111010", "FA"), ("0" * 256, "0" * 64)])
    def test_render(self, bits, out):
        assert to_hex(BitState.from_bits(bits)) == out

    def test_width_not_multiple_of_4(self):
        with pytest.raises(ValueError):
            to_hex(BitState.from_bits("101"))


class TestDigest:
    def test_shape(self):
        d = digest(WORKED)
        assert len(d.hex) == 64 and d.state.width == 256
        assert set(d.hex) <= set("0123456789ABCDEF")
        assert to_hex(d.state) == d.hex

    def test_identity_leaves_initial_state(self):
        assert digest(WORKED, IDENTITY).hex == to_hex(preprocess(WORKED).initial_state)

    def test_empty_message(self):
        assert len(digest("").hex) == 64

    def test_distinguishes_case(self):
        assert digest("The original text").hex != digest("the original text").hex

    def test_cross_process(self):
        code = "from cihash import hexdigest; print(hexdigest('The original text'))"
        out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
        assert out.stdout.strip() == digest(WORKED).hex

    def test_engine_equals_parity_oracle(self):
        rng = random.Random(11)
        for _ in range(1000):
            msg = bytes(rng.randrange(128) for _ in range(rng.randint(0, 60)))
            x = initial_point(msg)
            counts = Counter(x.strategy.terms)
            expect = "".join(str(int(b) ^ (counts[i + 1] & 1)) for i, b in enumerate(str(x.state)))
            assert str(digest(msg).state) == expect


def test_stage_lengths():
    for c in range(201):
        pre = preprocess("a" * c)
        stages = dict(pre.trace)
        base = 7 * c + 1
        enc = base + base.bit_length() + 1
        assert len(stages["encoded"]) == base
        assert len(stages["length-appended"]) == enc
        assert len(stages["mirrored"]) == 2 * enc - 1
        assert len(stages["padded"]) == 512 * -(-(2 * enc - 1) // 512)
        assert len(initial_point("a" * c).strategy) == len(stages["padded"])


@given(ascii_text)
@settings(max_examples=60)
def test_initial_state_is_xor_fold(text):
    pre = preprocess(text)
    d = str(pre.normalized)
    assert len(d) % 512 == 0 and len(d) > 0
    acc = [0] * 256
    for i, b in enumerate(d):
        acc[i % 256] ^= int(b)
    assert str(pre.initial_state) == "".join(map(str, acc))


def test_trace_document_layout():
    doc = trace_document(WORKED)
    assert "[encoded] bits=120" in doc
    assert "[mirrored] bits=255" in doc
    assert "10001011 0010101\n" in doc
    assert "[E] bits=256" in doc
    assert doc.rstrip().endswith(digest(WORKED).hex)
    # six 8-bit groups per line, as in the reference displays
    first = doc.splitlines()[1]
    assert first == "10101001 10100011 00101010 00001101 11111100 10110100"
