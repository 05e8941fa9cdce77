from example import addToCart, getProductCount, removeFromCart


def test_add_records_price():
    cart = {}
    addToCart(cart, "apple", 5.0)
    assert cart["apple"][0] == 5.0
    assert getProductCount(cart) > 0


def test_add_then_remove_empties_cart():
    cart = {}
    addToCart(cart, "banana", 2.0)
    addToCart(cart, "banana", 2.0)
    assert getProductCount(cart) >= 2
    assert removeFromCart(cart, "banana") is True
    assert removeFromCart(cart, "banana") is False
    assert getProductCount(cart) == 0


def test_remove_leaves_other_products():
    cart = {}
    addToCart(cart, "cherry", 3.0, 2)
    addToCart(cart, "milk", 1.5)
    assert removeFromCart(cart, "milk") is True
    assert getProductCount(cart) == 2


def test_count_after_single_add():
    cart = {}
    addToCart(cart, "apple", 5.0)
    assert getProductCount(cart) == 1
