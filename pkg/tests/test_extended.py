from cayleysync.extended import INF, Infinity, ext_from_json, ext_to_json


def test_inf_orders_above_ints():
    assert 10**9 < INF
    assert not INF < 3
    assert max([2, INF, 5]) is INF
    assert min([INF, 4]) == 4
    assert INF == INF and INF != 7


def test_singleton_and_json():
    assert Infinity() is INF
    assert ext_to_json(INF) == "inf"
    assert ext_to_json(3) == 3
    assert ext_from_json("inf") is INF
    assert ext_from_json(0) == 0
