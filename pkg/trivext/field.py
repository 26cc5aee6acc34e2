from sympy import isprime
from sympy.polys.domains import GF, QQ


class Field:
    """Exact ground field: the rationals or a prime field.

    Parameters
    ----------
    characteristic : int
        0 for the rationals, otherwise a prime p for GF(p).

    Examples
    --------
    .. code:: pycon

        >>> trivext.Field(0)
        Field('q')
        >>> trivext.Field(2).domain
        GF(2)

    """
    __slots__ = ('_characteristic', '_domain')

    def __init__(self, characteristic=0):
        characteristic = int(characteristic)
        if characteristic != 0 and not isprime(characteristic):
            raise ValueError(f'Field characteristic must be 0 or a prime, '
                             f'got {characteristic}')
        self._characteristic = characteristic
        self._domain = QQ if characteristic == 0 else GF(characteristic)

    @classmethod
    def rationals(cls):
        return cls(0)

    @classmethod
    def prime(cls, p):
        if int(p) == 0:
            raise ValueError('Prime field requires a prime, got 0')
        return cls(p)

    @property
    def characteristic(self):
        return self._characteristic

    @property
    def domain(self):
        """The sympy domain backing this field."""
        return self._domain

    @property
    def zero(self):
        return self._domain.zero

    @property
    def one(self):
        return self._domain.one

    def __call__(self, value):
        """Convert an int, Fraction-like or sympy number to a field element."""
        return self._domain.convert(value)

    def to_python(self, value):
        """Return a JSON-friendly representation of a field element.

        Rationals come back as ``int`` when integral and as the string
        ``'p/q'`` otherwise; prime field elements as ints in ``[0, p)``.
        """
        x = self._domain.to_sympy(value)
        if self._characteristic:
            return int(x) % self._characteristic
        if x.q == 1:
            return int(x.p)
        return f'{x.p}/{x.q}'

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return self._characteristic == other._characteristic

    def __hash__(self):
        return hash(('Field', self._characteristic))

    def __repr__(self):
        return f"Field('{self.tag}')"

    @property
    def tag(self):
        """Short name used on the command line and in reports."""
        return 'q' if self._characteristic == 0 else str(self._characteristic)

    def __getstate__(self):
        return (self._characteristic,)

    def __setstate__(self, state):
        self.__init__(state[0])


def asfield(f):
    """Convert the input to a :class:`Field`.

    Accepts an existing :class:`Field`, ``None`` (the rationals), an integer
    characteristic, or a tag string such as ``'q'``, ``'Q'``, ``'0'`` or
    ``'3'``.
    """
    if isinstance(f, Field):
        return f
    if f is None:
        return Field(0)
    if isinstance(f, int):
        return Field(f)
    if isinstance(f, str):
        tag = f.strip().lower()
        if tag in ('q', 'qq', 'rationals'):
            return Field(0)
        if tag.startswith('gf(') and tag.endswith(')'):
            tag = tag[3:-1]
        if tag.isdigit():
            return Field(int(tag))
        raise ValueError(f"Unknown field '{f}'")
    raise TypeError(f'Cannot create a field from {f.__class__.__name__}')
