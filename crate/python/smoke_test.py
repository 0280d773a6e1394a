"""Smoke test for the Python bindings: python python/smoke_test.py"""

import json
import math

import meshdist


def main() -> None:
    p = meshdist.Permutation("132")
    assert p.word == [1, 3, 2] and len(p) == 3
    assert meshdist.Permutation([2, 1]) == meshdist.Permutation("2 1")

    inv = meshdist.MeshPattern("tau=12;R=")
    assert str(inv) == "tau=12;R="
    assert inv.count(meshdist.Permutation("123")) == 3
    assert inv.occurrences(p) == [[0, 1], [0, 2]]

    table = meshdist.brute_distribution(inv, 3)
    assert table.rows[3] == [1, 2, 2, 1]
    assert meshdist.brute_distribution(meshdist.MeshPattern.from_nr(10), 3).rows[3] == [3, 3]

    stirling = meshdist.formula_table("T4.1", 4)
    assert stirling.rows[4] == [6, 11, 6, 1]
    assert meshdist.formula_table("C6.1", 4).conjectural
    back = meshdist.DistributionTable.from_json(stirling.to_json())
    assert back.rows == stirling.rows

    series = meshdist.formula_series("T1.1", 12)
    assert [sum(r) for r in series] == [math.factorial(n) for n in range(13)]

    pi = meshdist.Permutation("(15)(17)(16)9(10)6(12)8(13)(11)(14)745321")
    sigma = meshdist.map_g(pi)
    assert sigma.compact() == "(17)(16)(15)(13)(11)4231975(10)6(12)8(14)"
    assert meshdist.map_g_inverse(sigma) == pi
    assert meshdist.MeshPattern.from_nr(49).count(sigma) == 2
    assert str(meshdist.map_f(p)) == "2 3 1"
    try:
        meshdist.map_g(meshdist.Permutation("21"))
    except ValueError:
        pass
    else:
        raise AssertionError("avoider accepted by map_g")

    lines = [json.loads(l) for l in meshdist.verify_results(["T3.10", "C6.1"], n_max=6)]
    assert all(l["status"] == "OK" for l in lines) and len(lines) == 14

    report = json.loads(meshdist.check_group([48, 49], n_max=6))
    assert report["status"] == "proved"
    assert all("divergence" not in r for r in report["rows"])

    assert meshdist.theorem_for(63) == "T3.10"
    assert len(meshdist.catalog_numbers()) == 41
    print("python smoke test passed")


if __name__ == "__main__":
    main()
