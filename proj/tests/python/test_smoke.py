import json

import _mfx

RING = {"vars": ["x", "y"], "field": "Q", "order": "grevlex"}


def run(op, payload):
    code, out = _mfx.run(op, json.dumps(payload))
    return code, json.loads(out)


def test_ops_listing():
    ops = _mfx.ops()
    assert "gb" in ops
    assert "cert.theorem0" in ops
    assert ops == sorted(ops)


def test_gb_and_nf():
    code, out = run("gb", {"ring": RING, "I": ["x y - 1", "y^2 - 1"]})
    assert code == 0
    assert out["ok"] is True
    assert len(out["result"]["basis"]) == 2

    code, out = run("nf", {"ring": RING, "I": ["x^2+y^3"], "v": "y^3"})
    assert code == 0
    # grevlex: the lead of x^2+y^3 is y^3, so y^3 reduces to -x^2
    assert out["result"] == [{"c": "-1", "e": [2, 0]}]


def test_mf_verify_exit_codes():
    mat = lambda rows: {
        "rows": len(rows),
        "cols": len(rows[0]),
        "entries": [[p for p in row] for row in rows],
    }
    good = {
        "ring": RING,
        "f": "x^2+y^3",
        "A": mat([["x", "y"], ["-y^2", "x"]]),
        "B": mat([["x", "-y"], ["y^2", "x"]]),
    }
    assert run("mf.verify", good)[0] == 0
    bad = dict(good, B=mat([["x", "y"], ["y^2", "x"]]))
    assert run("mf.verify", bad)[0] == 1
    malformed = {k: v for k, v in good.items() if k != "B"}
    assert run("mf.verify", malformed)[0] == 2
    assert _mfx.run("gb", "{not json")[0] == 2


def test_catalog_roundtrip():
    code, out = run(
        "catalog.get", {"ring": RING, "name": "A", "params": {"m": 2, "j": 1}}
    )
    assert code == 0
    entry = out["result"]
    verify = {"ring": RING, **{k: entry["mfs"][0][k] for k in ("f", "A", "B")}}
    assert run("mf.verify", verify)[0] == 0


def test_theorem0_pipeline():
    one = {"rows": 1, "cols": 1, "entries": [["1"]]}
    xm = {"rows": 1, "cols": 1, "entries": [["x"]]}
    ym = {"rows": 1, "cols": 1, "entries": [["y"]]}
    fm = {
        "xs": ["x", "y"],
        "layers": [{"A": xm, "B": one}, {"A": ym, "B": one}],
        "blocks": {"0,1": one},
    }

    def leaf(pres, ideal):
        gen = {"I": [ideal], "P": pres}
        return {
            "mode": "closed",
            "level": 1,
            "gen": gen,
            "target": gen,
            "blocks": [{"kind": "gen", "syz": 0, "pres": gen}],
            "incl": one,
            "proj": one,
        }

    payload = {
        "ring": RING,
        "fm": fm,
        "hyps": [
            {"g": {"f": "x", "A": xm, "B": one}, "d": 0, "cert": leaf(xm, "x")},
            {"g": {"f": "y", "A": ym, "B": one}, "d": 0, "cert": leaf(ym, "y")},
        ],
    }
    code, out = run("cert.theorem0", payload)
    assert code == 0
    report = out["result"]
    assert report["level"] == 2
    assert report["radius_bound"] == 1

    code, _ = run("cert.verify", {"ring": RING, "cert": report["cert"]})
    assert code == 0
