#!/usr/bin/env python3
# Copyright 2026 The DIU Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS-IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent oracles for the frozen known answers.

MD5 and SHA-1 come from hashlib. SHA-192 is a literal straight-line
transcription of the six-register step, kept deliberately naive. The sine
table is evaluated with 60-digit mpmath arithmetic.

  oracle.py vectors     -> prints data/vectors.txt
  oracle.py constants   -> prints the single-step / schedule / T-table values
                           frozen into the C++ tests
"""

import hashlib
import random
import sys

import mpmath

M32 = 0xFFFFFFFF


def S(n, x):
    return ((x << n) | (x >> (32 - n))) & M32


def sha192_oracle(message: bytes) -> bytes:
    ml = len(message) * 8
    m = message + b"\x80"
    while len(m) % 64 != 56:
        m += b"\x00"
    m += ml.to_bytes(8, "big")

    H0, H1, H2, H3, H4, H5 = (0x67452301, 0xEFCDAB89, 0x98BADCFE,
                              0x10325476, 0xC3D2E1F0, 0xF9B2D834)
    for off in range(0, len(m), 64):
        Mi = m[off:off + 64]
        W = [int.from_bytes(Mi[4 * t:4 * t + 4], "big") for t in range(16)]
        for t in range(16, 80):
            W.append(S(1, W[t - 3] ^ W[t - 8] ^ W[t - 14] ^ W[t - 16]))
        A, B, C, D, E, F = H0, H1, H2, H3, H4, H5
        for t in range(80):
            if t <= 19:
                ft = (B & C) | ((~B & M32) & D)
                Kt = 0x5A827999
            elif t <= 39:
                ft = B ^ C ^ D
                Kt = 0x6ED9EBA1
            elif t <= 59:
                ft = (B & C) | (B & D) | (C & D)
                Kt = 0x8F1BBCDC
            else:
                ft = B ^ C ^ D
                Kt = 0xCA62C1D6
            TEMP1 = (S(5, A) + ft + E + W[t] + Kt) & M32
            TEMP2 = (S(5, A) + A + ft + E + W[t] + Kt + F) & M32
            E = D
            D = C
            C = S(30, B)
            B = S(15, A)
            F = TEMP1
            A = TEMP2
        H0 = (H0 + A) & M32
        H1 = (H1 + B) & M32
        H2 = (H2 + C) & M32
        H3 = (H3 + D) & M32
        H4 = (H4 + E) & M32
        H5 = (H5 + F) & M32
    return b"".join(h.to_bytes(4, "big") for h in (H0, H1, H2, H3, H4, H5))


def alphabet(n):
    s = b"abcdefghijklmnopqrstuvwxyz"
    return (s * (n // 26 + 1))[:n]


def emit_vectors():
    md5_msgs = [
        b"", b"a", b"abc", b"message digest",
        b"abcdefghijklmnopqrstuvwxyz",
        b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789",
        b"1234567890" * 8,
        alphabet(55), alphabet(56), alphabet(64), alphabet(1000),
    ]
    sha1_msgs = [
        b"", b"abc",
        b"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq",
        b"The quick brown fox jumps over the lazy dog",
        alphabet(63), alphabet(120), alphabet(1000),
    ]
    sha192_msgs = [b"", b"a", b"abc"] + [alphabet(n) for n in
                                          (55, 56, 63, 64, 119, 120, 1000)]
    print("# Frozen known-answer vectors: <alg>,<message-hex>,<digest-hex>")
    print("# md5/sha1 from hashlib; sha192 from tests/oracles/oracle.py")
    for m in md5_msgs:
        print(f"md5,{m.hex()},{hashlib.md5(m).hexdigest()}")
    for m in sha1_msgs:
        print(f"sha1,{m.hex()},{hashlib.sha1(m).hexdigest()}")
    for m in sha192_msgs:
        print(f"sha192,{m.hex()},{sha192_oracle(m).hex()}")


def emit_constants():
    mpmath.mp.dps = 60
    table = [int(mpmath.floor(abs(mpmath.sin(i)) * 2**32)) for i in range(1, 65)]
    print("T-table:")
    for r in range(0, 64, 4):
        print("  " + " ".join(f"0x{v:08X}," for v in table[r:r + 4]))

    # MD5 single step, RFC 1321 form, from the standard IV.
    a, b, c, d = 0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476
    f = (b & c) | ((~b & M32) & d)
    nb = (b + S(7, (a + f + 0 + table[0]) & M32)) & M32
    print(f"md5 step B' = 0x{nb:08X}  -> state (0x{d:08X}, 0x{nb:08X}, 0x{b:08X}, 0x{c:08X})")

    # SHA-192 single step from the IV with w = 0, t = 0.
    A, B, C, D, E, F = (0x67452301, 0xEFCDAB89, 0x98BADCFE,
                        0x10325476, 0xC3D2E1F0, 0xF9B2D834)
    ft = (B & C) | ((~B & M32) & D)
    T1 = (S(5, A) + ft + E + 0 + 0x5A827999) & M32
    T2 = (S(5, A) + A + ft + E + 0 + 0x5A827999 + F) & M32
    regs = (T2, S(15, A), S(30, B), C, D, T1)
    print("sha192 step:", ", ".join(f"0x{v:08X}" for v in regs))

    # Schedule brute force on a seeded block.
    rng = random.Random(20261015)
    W = [rng.getrandbits(32) for _ in range(16)]
    full = list(W)
    for t in range(16, 80):
        full.append(S(1, full[t - 3] ^ full[t - 8] ^ full[t - 14] ^ full[t - 16]))
    print("schedule block:", ", ".join(f"0x{v:08X}" for v in W))
    print(f"schedule w[79] = 0x{full[79]:08X}")

    # Avalanche sanity for the transcription itself.
    rng = random.Random(7)
    tot = 0
    for _ in range(1000):
        m = bytearray(rng.getrandbits(8) for _ in range(64))
        d0 = sha192_oracle(bytes(m))
        bit = rng.randrange(512)
        m[bit // 8] ^= 1 << (bit % 8)
        d1 = sha192_oracle(bytes(m))
        tot += bin(int.from_bytes(d0, "big") ^ int.from_bytes(d1, "big")).count("1")
    print(f"sha192 avalanche mean = {tot / 1000:.2f}")


if __name__ == "__main__":
    {"vectors": emit_vectors, "constants": emit_constants}[sys.argv[1]]()
