# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Checksummed export bundles."""

from __future__ import absolute_import, print_function

from ..serializers import validate_document
from ..utils import get_config
from ..version import __version__
from .base_writer import BaseWriter


class BundleWriter(BaseWriter):
    """Bundle writer for artifacts.

    Lays the artifacts out in a BagIt-like bundle::

        bundle.txt
        bundle-info.txt
        manifest-md5.txt
        tagmanifest-md5.txt
        data/<artifact files>

    Nothing time dependent is written, so a bundle is byte-identical for
    identical artifacts.
    """

    writer_version = 'NodalBundle-v1.0.0'
    """Version of the bundle structure.

    Formatted as the ``External-Identifier`` tag::

        External-Identifier: <identifier>/<writer_version>
    """

    def __init__(self, out_dir, artifacts, payload_dir='data', extra_dir='',
                 tags=None, identifier=None, name_formatter=None):
        """Constructor of the bundle writer.

        :param tags: list of 2-tuples written to ``bundle-info.txt``;
            defaults to ``NODAL_BUNDLE_TAGS``. Tags with a ``None`` value
            are generated.
        :param identifier: bundle identifier; defaults to the family and
            degree of the first artifact.
        """
        super(BundleWriter, self).__init__(
            out_dir, artifacts, payload_dir=payload_dir, extra_dir=extra_dir,
            name_formatter=name_formatter)
        self.tags = tags or get_config('NODAL_BUNDLE_TAGS')
        self.identifier = identifier or self._default_identifier()

    def _default_identifier(self):
        for artifact in self.artifacts:
            if artifact.family and artifact.m:
                return '{0}-m{1}'.format(artifact.family, artifact.m)
        return 'bundle'

    def get_bundle_file(self):
        """``bundle.txt`` with the version and encoding."""
        content = 'Bundle-Version: 1.0\nTag-File-Character-Encoding: UTF-8'
        return self._generate_extra_info(content, 'bundle.txt')

    @staticmethod
    def _get_checksum(checksum, expected='md5'):
        """Return the checksum if the type is the expected."""
        checksum = checksum.split(':')
        if checksum[0] != expected or len(checksum) != 2:
            raise AttributeError('Checksum format is not correct.')
        return checksum[1]

    def _generate_md5manifest_content(self, filesinfo):
        return '\n'.join('{0} {1}'.format(self._get_checksum(f['checksum']),
                                          f['filepath']) for f in filesinfo)

    def get_manifest_file(self, filesinfo):
        """``manifest-md5.txt`` over the payload files."""
        content = self._generate_md5manifest_content(filesinfo)
        return self._generate_extra_info(content, 'manifest-md5.txt')

    @staticmethod
    def _generate_payload_oxum(filesinfo):
        return '{0}.{1}'.format(sum(f['size'] for f in filesinfo),
                                len(filesinfo))

    def get_bundleinfo_file(self, filesinfo):
        """``bundle-info.txt`` from the tags."""
        content = []
        for t_name, t_value in self.tags:
            if t_name == 'Payload-Oxum':
                t_value = self._generate_payload_oxum(filesinfo)
            elif t_name == 'Bundle-Software' and t_value is None:
                t_value = 'nodal-surfaces {0}'.format(__version__)
            elif t_name == 'External-Identifier' and t_value is None:
                t_value = '{0}/{1}'.format(self.identifier,
                                           self.writer_version)
            content.append('{0}: {1}'.format(t_name, t_value))
        return self._generate_extra_info('\n'.join(content),
                                         'bundle-info.txt')

    def get_tagmanifest_file(self, filesinfo):
        """``tagmanifest-md5.txt`` over the tag files."""
        content = self._generate_md5manifest_content(filesinfo)
        return self._generate_extra_info(content, 'tagmanifest-md5.txt')

    def _get_extra_files(self, payload_files):
        bundle_files = [
            self.get_bundleinfo_file(payload_files),
            self.get_manifest_file(payload_files),
            self.get_bundle_file(),
        ]
        bundle_files.append(self.get_tagmanifest_file(bundle_files))
        return bundle_files

    @staticmethod
    def get_bundle_metadata(filesinfo):
        """Validated file information, without the contents.

        :raises jsonschema.ValidationError: if an entry does not conform to
            ``NODAL_BUNDLE_JSONSCHEMA``.
        """
        metadata = {'files': [{k: v for k, v in fi.items() if k != 'content'}
                              for fi in filesinfo]}
        return validate_document(metadata, 'NODAL_BUNDLE_JSONSCHEMA')

    def write_all_files(self, filesinfo=None):
        """Validate the file information and write the bundle."""
        filesinfo = filesinfo or self.get_all_files()
        self.get_bundle_metadata(filesinfo)
        return super(BundleWriter, self).write_all_files(filesinfo=filesinfo)
