# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Module tests for the artifact writers."""

from __future__ import absolute_import, print_function

import os
from hashlib import md5

import pytest
from helpers import get_file
from jsonschema.exceptions import ValidationError

from nodal_surfaces.signals import bundle_writer_status
from nodal_surfaces.version import __version__
from nodal_surfaces.writers import Artifact, BaseWriter, BundleWriter
from nodal_surfaces.writers.utils import secure_artifact_name_formatter

CSV = 'x,y\n0,1\n'
PGM = b'P5\n2 1\n255\n\x00\xff'


def checksum(data):
    """md5 checksum string of bytes."""
    return 'md5:' + md5(data).hexdigest()


@pytest.fixture()
def artifacts():
    """A text and a binary artifact."""
    return [Artifact('nodes', 'csv', CSV, 'P_C', 6),
            Artifact('sign-plot', 'pgm', PGM, 'P_C', 6)]


def test_artifact_data():
    """Text is encoded as UTF-8."""
    assert Artifact('a', 'txt', u'π').data == b'\xcf\x80'
    assert Artifact('a', 'pgm', PGM).data is PGM


def test_getters(app, out_dir, artifacts):
    """File information of the payload."""
    writer = BaseWriter(out_dir, artifacts)
    files = writer.get_all_files()
    assert len(files) == 2
    fi = get_file('P_C-m6-nodes.csv', files)
    assert fi == {
        'checksum': checksum(CSV.encode('utf-8')),
        'size': len(CSV),
        'filepath': 'P_C-m6-nodes.csv',
        'fullpath': os.path.join(os.path.abspath(out_dir),
                                 'P_C-m6-nodes.csv'),
        'artifact': 'nodes',
        'content': CSV.encode('utf-8'),
    }
    assert get_file('P_C-m6-sign-plot.pgm', files)['size'] == len(PGM)


def test_write_all(app, out_dir, artifacts):
    """Files are written and announced one by one."""
    statuses = []

    def receiver(status, **kwargs):
        statuses.append(status)

    writer = BaseWriter(out_dir, artifacts, payload_dir='data')
    with bundle_writer_status.connected_to(receiver):
        writer.write_all_files()
    assert sorted(os.listdir(os.path.join(out_dir, 'data'))) == [
        'P_C-m6-nodes.csv', 'P_C-m6-sign-plot.pgm']
    with open(os.path.join(out_dir, 'data', 'P_C-m6-sign-plot.pgm'),
              'rb') as fp:
        assert fp.read() == PGM
    assert [s['written_files'] for s in statuses] == [1, 2]
    assert statuses[-1]['written_size'] == statuses[-1]['total_size'] == \
        len(CSV) + len(PGM)
    assert statuses[0]['current_filename'] == 'data/P_C-m6-nodes.csv'


def test_write_needs_content(app, out_dir, artifacts):
    """File information without content cannot be written."""
    writer = BaseWriter(out_dir, artifacts)
    files = writer.get_all_files()
    del files[0]['content']
    with pytest.raises(ValueError):
        writer.write_all_files(files)
    assert os.listdir(out_dir) == []


def test_name_formatter(app, out_dir):
    """Custom formatters strip unsafe names."""
    artifact = Artifact('../../etc/passwd', 'txt', 'x')
    writer = BaseWriter(out_dir, [artifact],
                        name_formatter=secure_artifact_name_formatter)
    fi = writer.get_all_files()[0]
    assert fi['filepath'] == 'etc_passwd.txt'
    assert fi['fullpath'].startswith(os.path.abspath(out_dir))


def test_get_checksum():
    """Only md5 checksums are accepted in manifests."""
    with pytest.raises(AttributeError):
        BundleWriter._get_checksum('sha1:12')
    with pytest.raises(AttributeError):
        BundleWriter._get_checksum('md5')
    assert BundleWriter._get_checksum('md5:12') == '12'


def test_bundle_files(app, out_dir, artifacts):
    """Tag files of a bundle."""
    writer = BundleWriter(out_dir, artifacts)
    assert writer.identifier == 'P_C-m6'
    files = writer.get_all_files()
    assert [f['filepath'] for f in files] == [
        'data/P_C-m6-nodes.csv',
        'data/P_C-m6-sign-plot.pgm',
        'bundle-info.txt',
        'manifest-md5.txt',
        'bundle.txt',
        'tagmanifest-md5.txt',
    ]
    manifest = get_file('manifest-md5.txt', files)['content'].decode()
    assert manifest == '{0} data/P_C-m6-nodes.csv\n{1} ' \
        'data/P_C-m6-sign-plot.pgm'.format(
            md5(CSV.encode('utf-8')).hexdigest(), md5(PGM).hexdigest())
    info = get_file('bundle-info.txt', files)['content'].decode()
    assert info.splitlines() == [
        'Bundle-Software: nodal-surfaces {0}'.format(__version__),
        'Payload-Oxum: {0}.2'.format(len(CSV) + len(PGM)),
        'External-Identifier: P_C-m6/NodalBundle-v1.0.0',
        'External-Description: Nodal surface artifacts.',
    ]
    tagmanifest = get_file('tagmanifest-md5.txt', files)['content'].decode()
    assert len(tagmanifest.splitlines()) == 3
    for name in ('bundle-info.txt', 'manifest-md5.txt', 'bundle.txt'):
        fi = get_file(name, files)
        assert '{0} {1}'.format(fi['checksum'][4:], name) in tagmanifest


def test_bundle_write(app, out_dir, artifacts):
    """Bundles are byte-identical for identical artifacts."""
    first = os.path.join(out_dir, 'first')
    second = os.path.join(out_dir, 'second')
    BundleWriter(first, artifacts).write_all_files()
    BundleWriter(second, artifacts).write_all_files()
    assert sorted(os.listdir(first)) == [
        'bundle-info.txt', 'bundle.txt', 'data', 'manifest-md5.txt',
        'tagmanifest-md5.txt']
    for name in ('bundle-info.txt', 'manifest-md5.txt',
                 'tagmanifest-md5.txt'):
        with open(os.path.join(first, name), 'rb') as fp1, \
                open(os.path.join(second, name), 'rb') as fp2:
            assert fp1.read() == fp2.read()
    with open(os.path.join(first, 'bundle.txt')) as fp:
        assert fp.read() == \
            'Bundle-Version: 1.0\nTag-File-Character-Encoding: UTF-8'


def test_bundle_tags_and_identifier(app, out_dir):
    """Explicit tags and identifier."""
    writer = BundleWriter(out_dir, [Artifact('census', 'csv', 'a\n')],
                          tags=[('External-Identifier', None),
                                ('Contact-Name', 'Surface Lab')])
    assert writer.identifier == 'bundle'
    info = get_file('bundle-info.txt', writer.get_all_files())
    assert info['content'].decode() == \
        'External-Identifier: bundle/NodalBundle-v1.0.0\n' \
        'Contact-Name: Surface Lab'


def test_bundle_metadata_validation(app, out_dir, artifacts):
    """File information is validated before writing."""
    writer = BundleWriter(out_dir, artifacts)
    files = writer.get_all_files()
    metadata = BundleWriter.get_bundle_metadata(files)
    assert all('content' not in f for f in metadata['files'])
    files[0]['checksum'] = 'sha1:1234'
    with pytest.raises(ValidationError):
        writer.write_all_files(files)
    assert os.listdir(out_dir) == []


def test_writer_from_state(app, out_dir, artifacts):
    """The configured writer class is exposed by the extension state."""
    from nodal_surfaces.proxies import current_nodal
    writer = current_nodal.bundle_writer(out_dir, artifacts)
    assert isinstance(writer, BundleWriter)
