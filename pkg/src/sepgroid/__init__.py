# SPDX-FileCopyrightText: 2024-present Robert Groves <rwgdev@gmail.com>
#
# SPDX-License-Identifier: MIT
