import re
from fractions import Fraction

from rest_framework import serializers

from action.formulas import ActionMode, GeneratorIndex
from core.conf import gt_setting
from core.exceptions import BoundsError
from core.rationals import format_rational
from core.tableaux import Seed, Shift, shift_length

RATIONAL_PATTERN = re.compile(r'^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$')
INTEGER_LIST_PATTERN = re.compile(r'^\s*-?\d+(\s*,\s*-?\d+)*\s*$')

SUITES = ['relations', 'gamma', 'closure', 'findim', 'census', 'chain']


class RationalField(serializers.Field):
    """An exact rational written "p/q" or "p"; floats are refused"""
    default_error_messages = {
        'invalid': '"{value}" is not a rational of the form p/q or p.',
        'zero_denominator': '"{value}" has a zero denominator.',
    }

    def to_internal_value(self, data):
        if isinstance(data, bool) or not isinstance(data, (str, int)):
            self.fail('invalid', value=data)
        match = RATIONAL_PATTERN.match(str(data))
        if not match:
            self.fail('invalid', value=data)
        numerator, denominator = match.group(1), match.group(2)
        if denominator is not None and int(denominator) == 0:
            self.fail('zero_denominator', value=data)
        return Fraction(int(numerator), int(denominator or 1))

    def to_representation(self, value):
        return format_rational(value)


class IntegerListField(serializers.Field):
    """"a,b,c" (or a list of ints) as a tuple of ints"""
    default_error_messages = {
        'invalid': '"{value}" must be comma-separated integers.',
    }

    def to_internal_value(self, data):
        if isinstance(data, (list, tuple)):
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in data):
                self.fail('invalid', value=data)
            return tuple(data)
        if not isinstance(data, str) or not INTEGER_LIST_PATTERN.match(data):
            self.fail('invalid', value=data)
        return tuple(int(x) for x in data.split(','))

    def to_representation(self, value):
        return ','.join(str(x) for x in value)


class SeedDocumentSerializer(serializers.Serializer):
    """{"n": 3, "rows": [["0", "1/3", "2/3"], ["0", "4/3"], ["0"]]}, top row first"""
    n = serializers.IntegerField(min_value=2)
    rows = serializers.ListField(child=serializers.ListField(child=RationalField()))

    def validate(self, attrs):
        n, rows = attrs['n'], attrs['rows']
        if len(rows) != n:
            raise serializers.ValidationError({'rows': f"expected {n} rows, got {len(rows)}"})
        for offset, row in enumerate(rows):
            if len(row) != n - offset:
                raise serializers.ValidationError(
                    {'rows': f"row {n - offset} must hold {n - offset} entries, got {len(row)}"})
        return attrs

    def create(self, validated_data):
        return Seed(tuple(tuple(row) for row in validated_data['rows']))


class CommandInputSerializer(serializers.Serializer):
    """Flags shared by every command; the seed is validated separately"""
    shift = IntegerListField(required=False, allow_null=True, default=None)

    def shift_for(self, seed):
        entries = self.validated_data.get('shift')
        if entries is None:
            return Shift.zero(seed.n)
        if len(entries) != shift_length(seed.n):
            raise BoundsError(
                f"--shift has {len(entries)} entries, n={seed.n} needs {shift_length(seed.n)}")
        return Shift(entries)


class OmegaInputSerializer(CommandInputSerializer):
    pass


class ActInputSerializer(CommandInputSerializer):
    generator = IntegerListField()
    mode = serializers.ChoiceField(choices=ActionMode.choices, default=ActionMode.GENERIC)

    def validate_generator(self, value):
        if len(value) != 2:
            raise serializers.ValidationError('--generator takes two indices "i,j".')
        return value

    def generator_for(self, seed):
        i, j = self.validated_data['generator']
        return GeneratorIndex(i, j).check(seed.n)


class BasisInputSerializer(CommandInputSerializer):
    radius = serializers.IntegerField(min_value=0)
    which = serializers.ChoiceField(choices=['N', 'I'], default='I')


class BlockInputSerializer(CommandInputSerializer):
    radius = serializers.IntegerField(min_value=0, required=False, allow_null=True, default=None)
    census = serializers.BooleanField(default=False)


class VerifyInputSerializer(serializers.Serializer):
    suite = serializers.ChoiceField(choices=SUITES)
    samples = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    rng_seed = serializers.IntegerField(min_value=0, required=False, allow_null=True, default=None)
    n = serializers.IntegerField(min_value=2, max_value=6, required=False, allow_null=True, default=None)
    weight = IntegerListField(required=False, allow_null=True, default=None)
    radius = serializers.IntegerField(min_value=0, required=False, allow_null=True, default=None)

    def validate_samples(self, value):
        return gt_setting('DEFAULT_SAMPLES') if value is None else value

    def validate_rng_seed(self, value):
        return gt_setting('DEFAULT_RNG_SEED') if value is None else value

    def validate(self, attrs):
        if attrs['suite'] == 'findim' and attrs.get('weight') is None:
            raise serializers.ValidationError({'weight': 'the findim suite needs --weight'})
        return attrs


class ResultDocumentSerializer(serializers.Serializer):
    schema_version = serializers.CharField()
    command = serializers.DictField()
    input_digest = serializers.CharField()
    payload = serializers.JSONField()
