#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""kodaira Configuration
==============================

kodaira uses [Yacs configuration system](https://github.com/rbgirshick/yacs)
so that a computation is fully described by `code + config`. Defaults live in
:ref:`kodaira.config.default`; YAML files under ``configs/`` override them and
trailing command line options override the YAML.

## Config usage

```python
from kodaira.config import get_config

config = get_config("configs/scans/mixed_sweep.yaml",
                    ["RETRY.MAX_PRECISION_DOUBLINGS", 2])
print(config.FIELD, config.SCAN.TOWERS)
```

The LMFDB base URL can also be overridden with the ``KODAIRA_LMFDB_URL``
environment variable.
"""

from kodaira.config.default import Config, get_config

__all__ = ["Config", "get_config"]
