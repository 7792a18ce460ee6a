import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from divmon import NotADivisibilityMonoid, RightNormalForm, check_words

from conftest import data_file


def test_fit_transform_render():
    est = RightNormalForm().fit(data_file("squares"))
    (nf,) = est.transform(["yzyxxz"])
    assert est.render(nf) == "[x y].y.y.[y z]"
    assert est.n_hypercubes_ == 6
    assert est.check_report_.passed


def test_params_and_clone():
    est = RightNormalForm(augmented=True, max_length=12)
    assert est.get_params() == {"augmented": True, "check": True, "class_cap": 10 ** 6, "max_length": 12}
    assert clone(est).get_params() == est.get_params()
    est.set_params(augmented=False)
    assert not est.augmented


def test_augmented_agrees():
    words = ["", "x", "yzyxxz", "zzzyx", "xyzxyz"]
    plain = RightNormalForm().fit(data_file("cyclic")).transform(words)
    aug = RightNormalForm(augmented=True).fit(data_file("cyclic")).transform(words)
    assert plain == aug


def test_predict_word_problem():
    est = RightNormalForm().fit(data_file("squares"))
    assert est.predict([("yzyxxz", "xxyyzz"), ("xy", "yx"), ("", "1")]) == [True, False, True]


def test_inverse_transform_gives_canonical_words():
    est = RightNormalForm().fit(data_file("squares"))
    m = est.monoid_
    words = ["yzyxxz", "zz", "xyzzy"]
    back = est.inverse_transform(est.transform(words))
    assert back == [m.element(w).word for w in words]
    assert est.inverse_transform(["[x y].y.y.[y z]"]) == [m.element("xxyyzz").word]


def test_fit_transform_via_mixin():
    est = RightNormalForm()
    with pytest.raises(TypeError):
        est.fit(42)
    est.fit(data_file("divisibility"))
    assert est.transform([(0, 1)]) == est.transform(["yz"])


def test_unfitted():
    with pytest.raises(NotFittedError):
        RightNormalForm().transform(["x"])


def test_rejects_bad_monoid():
    with pytest.raises(NotADivisibilityMonoid):
        RightNormalForm().fit(data_file("bad"))


def test_check_words_validation():
    est = RightNormalForm().fit(data_file("divisibility"))
    p = est.monoid_.presentation
    with pytest.raises(TypeError):
        check_words("xyz", p)
    with pytest.raises(ValueError):
        check_words([(0, 5)], p)
    with pytest.raises(KeyError):
        check_words(["xq"], p)
