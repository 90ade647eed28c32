import json

import pytest

from wreathsf.cyclotomic import Cyclotomic, zeta
from wreathsf.errors import MalformedGroup, ParseError, UnknownGroup, ValidationFailed
from wreathsf.groups import BUILTIN_NAMES, ClassInfo, GroupData, builtin, load_group, validate, zeta_order


def perturbed(G, i, j, delta):
    table = [list(row) for row in G.table]
    table[i][j] = table[i][j] + delta
    return GroupData(G.name, G.order, G.exponent, G.classes, tuple(map(tuple, table)))


class TestBuiltins:
    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_valid(self, name):
        G = builtin(name)
        assert validate(G).ok
        assert sum(d * d for d in G.degrees) == G.order

    def test_tables(self):
        assert [[int(v.rational_value()) for v in row] for row in builtin("z2").table] == [[1, 1], [1, -1]]
        assert builtin("trivial").table == ((Cyclotomic.rational(1),),)
        assert builtin("s3").degrees == (1, 1, 2)
        z3 = builtin("z3")
        for i in range(3):
            for j in range(3):
                assert z3.value(i, j) == zeta(3, i * j)
        z4 = builtin("z4")
        assert z4.value(1, 1) == zeta(4) and z4.value(1, 3) == zeta(4, 3)

    def test_s3_classes(self):
        G = builtin("s3")
        assert [c.size for c in G.classes] == [1, 3, 2]

    def test_unknown(self):
        with pytest.raises(UnknownGroup):
            builtin("q8")

    def test_zeta(self):
        assert zeta_order(builtin("z2"), 0) == zeta_order(builtin("z2"), 1) == 2
        assert zeta_order(builtin("s3"), 1) == 2
        for name in BUILTIN_NAMES:
            G = builtin(name)
            assert zeta_order(G, 0) == G.order

    def test_zeta_non_divisible(self):
        G = builtin("z2")
        bad = GroupData("bad", 2, 2, (ClassInfo("1", 1, 0), ClassInfo("g", 3, 1)), G.table)
        with pytest.raises(MalformedGroup):
            zeta_order(bad, 1)
        assert not validate(bad).ok


class TestValidation:
    @pytest.mark.parametrize("name", ["z2", "z3"])
    def test_every_single_entry_perturbation_fails(self, name):
        G = builtin(name)
        deltas = [Cyclotomic.rational(1), Cyclotomic.rational(-2), zeta(3), Cyclotomic(4, [0, 1])]
        for i in range(G.r):
            for j in range(G.r):
                for d in deltas:
                    assert not validate(perturbed(G, i, j, d)).ok

    def test_sign_flip_names_relation(self):
        G = builtin("s3")
        table = [list(row) for row in G.table]
        table[2][2] = -table[2][2]
        bad = GroupData("s3", 6, 6, G.classes, tuple(map(tuple, table)))
        rep = validate(bad)
        assert not rep.ok
        assert any("orthogonality" in v for v in rep.violations)
        assert rep.to_json()["valid"] is False

    def test_bad_inverse_map(self):
        G = builtin("z3")
        classes = (G.classes[0], ClassInfo("g", 1, 1), ClassInfo("g2", 1, 2))
        rep = validate(GroupData("z3", 3, 3, classes, G.table))
        assert not rep.ok


class TestLoad:
    def test_roundtrip(self):
        for name in BUILTIN_NAMES:
            G = builtin(name)
            assert load_group(G.to_json()) == G
            assert load_group(json.dumps(G.to_json())) == G

    def test_from_file(self, tmp_path):
        path = tmp_path / "z3.json"
        path.write_text(json.dumps(builtin("z3").to_json()))
        assert load_group(str(path)) == builtin("z3")

    def test_infer_inverse(self):
        doc = builtin("z4").to_json()
        for c in doc["classes"]:
            del c["inverse"]
        del doc["exponent"]
        G = load_group(doc)
        assert [c.inverse for c in G.classes] == [0, 3, 2, 1]
        assert G.exponent == 4

    def test_inverse_ambiguous(self):
        doc = {
            "name": "dup",
            "order": 2,
            "classes": [{"label": "a", "size": 1}, {"label": "b", "size": 1}],
            "table": [[1, 1], [1, 1]],
        }
        with pytest.raises(ParseError):
            load_group(doc)

    def test_wrong_order(self):
        doc = builtin("z2").to_json()
        doc["order"] = 4
        with pytest.raises(ValidationFailed) as info:
            load_group(doc)
        assert info.value.report.violations

    def test_malformed(self):
        with pytest.raises(ParseError):
            load_group("{oops")
        with pytest.raises(ParseError):
            load_group({"order": 2})
        with pytest.raises(ParseError):
            load_group("/nonexistent/group.json")
