"""Reading seed documents and writing deterministic result documents."""
import hashlib
import json
import logging

from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from core.conf import gt_setting

from .serializers import ResultDocumentSerializer, SeedDocumentSerializer

logger = logging.getLogger(__name__)


def load_seed(path):
    """Parse and validate a seed document; returns (Seed, canonical document)"""
    try:
        with open(path, 'rb') as stream:
            data = JSONParser().parse(stream)
    except OSError as exc:
        raise ParseError(f"cannot read seed document {path}: {exc.strerror}")
    serializer = SeedDocumentSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    seed = serializer.save()
    logger.debug("loaded seed (%s) from %s", seed, path)
    return seed, SeedDocumentSerializer(seed).data


def seed_document(seed):
    return SeedDocumentSerializer(seed).data


def input_digest(command, seed_data):
    canonical = json.dumps(
        {'command': command, 'seed': seed_data}, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


def render_result(name, options, seed_data, payload):
    command = {'name': name, 'options': options}
    document = ResultDocumentSerializer({
        'schema_version': gt_setting('SCHEMA_VERSION'),
        'command': command,
        'input_digest': input_digest(command, seed_data),
        'payload': payload,
    }).data
    return JSONRenderer().render(document, renderer_context={'indent': 2}).decode('utf-8')
