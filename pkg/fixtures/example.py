"""A tiny shopping cart used by the demo test-suite."""


def addToCart(cart, name, price, amount=1):
    if name in cart:
        _, existing = cart[name]
        amount = existing + amount
    total = price * amount
    if amount < 0:
        raise ValueError("negative amount")
    cart[name] = (total, amount + 1)
    return cart


def removeFromCart(cart, name):
    if name not in cart:
        return False
    del cart[name]
    return True


def printProductsInCart(cart):
    for name, (total, amount) in sorted(cart.items()):
        print(name, total, amount)


def getProductCount(cart):
    count = 0
    for name in cart:
        count += cart[name][1]
    return count
